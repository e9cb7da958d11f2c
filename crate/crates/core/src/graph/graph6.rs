//! graph6 encoding (<https://users.cecs.anu.edu.au/~bdm/data/formats.txt>).
//!
//! Sizes up to 258047 are accepted (one- and four-byte headers); the
//! eight-byte header is rejected.

use crate::error::ParseError;
use crate::graph::SimpleGraph;

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = 258_047;

fn err(offset: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Graph6 {
        offset,
        msg: msg.into(),
    }
}

/// Decodes one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are tolerated.
pub fn parse_graph6(text: &str) -> Result<SimpleGraph, ParseError> {
    let mut line = text.strip_suffix('\n').unwrap_or(text);
    line = line.strip_suffix('\r').unwrap_or(line);
    let mut base = 0;
    if let Some(rest) = line.strip_prefix(HEADER) {
        line = rest;
        base = HEADER.len();
    }
    let bytes = line.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(
                base + i,
                format!("byte {b:#04x} outside the printable range 63..=126"),
            ));
        }
    }
    let first = *bytes.first().ok_or_else(|| err(base, "empty input"))?;
    let (n, header_len) = if first != 126 {
        ((first - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(err(base + bytes.len(), "truncated size header"));
        }
        if bytes[1] == 126 {
            return Err(err(base + 1, "eight-byte size header is not supported"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(err(base, format!("non-canonical long header for n = {n}")));
        }
        (n, 4)
    };
    if n > MAX_N {
        return Err(err(base, format!("n = {n} exceeds {MAX_N}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < body_len {
        return Err(err(
            base + bytes.len(),
            format!(
                "truncated bit field: need {body_len} bytes, found {}",
                body.len()
            ),
        ));
    }
    if body.len() > body_len {
        return Err(err(
            base + header_len + body_len,
            "trailing bytes after bit field",
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[body_len - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(
                base + header_len + body_len - 1,
                "nonzero padding bits",
            ));
        }
    }
    Ok(SimpleGraph::from_edges_unchecked(n, &edges))
}

/// Encodes without header or trailing newline.
pub fn serialize_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph6 size limit");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
