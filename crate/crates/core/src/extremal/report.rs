use std::fmt::Write as _;

use serde::Serialize;

use crate::count::ExactCount;
use crate::graph::{certificate, h_certificate, serialize_graph6, HGraph, SimpleGraph};

/// Hard checks are theorems for every `n`; report checks record small-`n`
/// behaviour of asymptotic statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Hard,
    Report,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub g6: String,
    pub count: ExactCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub i: usize,
    pub j: usize,
    pub count: ExactCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict<W> {
    Confirmed,
    Violated { witnesses: Vec<W> },
    NotApplicable { reason: String },
}

impl<W> Verdict<W> {
    pub fn from_witnesses(witnesses: Vec<W>) -> Self {
        if witnesses.is_empty() {
            Verdict::Confirmed
        } else {
            Verdict::Violated { witnesses }
        }
    }

    pub fn is_confirmed(&self) -> bool {
        matches!(self, Verdict::Confirmed)
    }

    pub fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "size", rename_all = "snake_case")]
pub enum EqualityClass {
    /// Every graph in the family has the same count.
    AllEqual,
    /// Exactly one graph attains the extremum.
    Unique,
    /// Several (but not all) graphs attain it.
    Tied(usize),
    Empty,
}

/// Whether the target satisfies the theorem's hypothesis. Recorded
/// alongside report-mode verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub g6: String,
    pub certificate: String,
    pub count_decimal: ExactCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub family: String,
    pub h: String,
    pub h_certificate: String,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<Hypothesis>,
    pub rows: Vec<ReportRow>,
    pub extremal: Vec<String>,
    pub extremal_count: Option<ExactCount>,
    pub equality: EqualityClass,
    pub verdict: Verdict<Witness>,
    pub notes: Vec<String>,
}

/// Compact one-line description of a target: matrix rows joined by `/`.
pub fn describe_h(h: &HGraph) -> String {
    h.matrix()
        .iter()
        .map(|r| r.iter().map(|&x| char::from(b'0' + x)).collect::<String>())
        .collect::<Vec<_>>()
        .join("/")
}

#[derive(Clone, Copy)]
pub(crate) enum Extremum {
    Max,
    Min,
}

impl VerificationReport {
    /// Builds rows and the extremal set; the verdict is filled in by the
    /// caller. `graphs` and `counts` are parallel.
    pub(crate) fn tabulate(
        theorem: &str,
        family: String,
        h: &HGraph,
        mode: Mode,
        graphs: &[SimpleGraph],
        counts: &[ExactCount],
        extremum: Extremum,
    ) -> VerificationReport {
        let rows: Vec<ReportRow> = graphs
            .iter()
            .zip(counts)
            .map(|(g, c)| ReportRow {
                g6: serialize_graph6(g),
                certificate: certificate(g).map(|c| c.to_hex()).unwrap_or_default(),
                count_decimal: c.clone(),
            })
            .collect();
        let best = match extremum {
            Extremum::Max => counts.iter().max(),
            Extremum::Min => counts.iter().min(),
        }
        .cloned();
        let extremal: Vec<String> = match &best {
            Some(b) => rows
                .iter()
                .filter(|r| &r.count_decimal == b)
                .map(|r| r.g6.clone())
                .collect(),
            None => Vec::new(),
        };
        let equality = match extremal.len() {
            0 => EqualityClass::Empty,
            k if k == rows.len() => EqualityClass::AllEqual,
            1 => EqualityClass::Unique,
            k => EqualityClass::Tied(k),
        };
        VerificationReport {
            theorem: theorem.to_string(),
            family,
            h: describe_h(h),
            h_certificate: h_certificate(h).to_hex(),
            mode,
            hypothesis: None,
            rows,
            extremal,
            extremal_count: best,
            equality,
            verdict: Verdict::Confirmed,
            notes: Vec::new(),
        }
    }

    /// `PASS`, `REPORT` or `FAIL`, plus `N/A` for inapplicable hypotheses.
    pub fn status(&self) -> &'static str {
        match (&self.verdict, self.mode) {
            (Verdict::NotApplicable { .. }, _) => "N/A",
            (_, Mode::Report) => "REPORT",
            (Verdict::Confirmed, Mode::Hard) => "PASS",
            (Verdict::Violated { .. }, Mode::Hard) => "FAIL",
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("g6,certificate,count\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{}", r.g6, r.certificate, r.count_decimal);
        }
        out
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let verdict = match &self.verdict {
            Verdict::Confirmed => "confirmed".to_string(),
            Verdict::Violated { witnesses } => format!("violated ({} witnesses)", witnesses.len()),
            Verdict::NotApplicable { reason } => format!("not applicable: {reason}"),
        };
        let mut shown = self
            .extremal
            .iter()
            .take(4)
            .cloned()
            .collect::<Vec<_>>()
            .join(", ");
        if self.extremal.len() > 4 {
            let _ = write!(shown, ", +{} more", self.extremal.len() - 4);
        }
        format!(
            "{} {} {} h={}: {} graphs, extremal [{}] count {}, {}",
            self.status(),
            self.theorem,
            self.family,
            self.h,
            self.rows.len(),
            shown,
            self.extremal_count
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_else(|| "-".into()),
            verdict
        )
    }
}
