use std::collections::HashSet;
use std::io::BufRead;

use crate::error::{Error, ParseError, Result};
use crate::family::FamilyKind;
use crate::graph::{certificate, parse_graph6, SimpleGraph};

#[derive(Clone, Debug, Default)]
pub struct IngestOptions {
    /// Abort on the first malformed line instead of recording it.
    pub strict: bool,
    /// Keep only the first graph of each isomorphism class.
    pub dedup: bool,
    /// Keep only members of this family.
    pub filter: Option<FamilyKind>,
}

#[derive(Clone, Debug, Default)]
pub struct IngestOutcome {
    pub graphs: Vec<SimpleGraph>,
    /// 1-based line numbers of skipped malformed lines.
    pub errors: Vec<(usize, ParseError)>,
    pub filtered_out: usize,
    pub duplicates: usize,
}

/// Reads graph6 lines in order. Blank lines are ignored.
pub fn ingest_graph6_stream<R: BufRead>(reader: R, opts: &IngestOptions) -> Result<IngestOutcome> {
    let mut out = IngestOutcome::default();
    let mut seen = HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let g = match parse_graph6(line.trim_end()) {
            Ok(g) => g,
            Err(e) if opts.strict => {
                return Err(Error::Ingest {
                    line: lineno,
                    source: e,
                })
            }
            Err(e) => {
                out.errors.push((lineno, e));
                continue;
            }
        };
        if let Some(kind) = opts.filter {
            if !kind.contains(&g) {
                out.filtered_out += 1;
                continue;
            }
        }
        if opts.dedup && !seen.insert(certificate(&g)?) {
            out.duplicates += 1;
            continue;
        }
        out.graphs.push(g);
    }
    Ok(out)
}
