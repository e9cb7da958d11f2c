use serde::Serialize;

use crate::count::ExactCount;
use crate::error::{Error, Result};
use crate::graph::{complete_bipartite, h_certificate, looped_complete, HGraph};
use crate::hom::{cycle_counts, path_counts, walk_matrix_power};

use super::report::{PairWitness, Verdict};

/// Default search cutoff: `10·|V(H)| + 50`.
pub fn default_cutoff(h: &HGraph) -> usize {
    10 * h.q() + 50
}

/// Least `ℓ ≥ 2` with `hom(P_ℓ, H) < Δ^{ℓ-2}`. Since
/// `hom(P_{k+1}, H) ≤ Δ·hom(P_k, H)`, the strict inequality persists for
/// every larger `k`.
pub fn path_bound_threshold(h: &HGraph) -> Result<usize> {
    path_bound_threshold_with_cutoff(h, default_cutoff(h))
}

pub fn path_bound_threshold_with_cutoff(h: &HGraph, cutoff: usize) -> Result<usize> {
    if h.is_regular() {
        return Err(Error::NotApplicable("target is regular".into()));
    }
    let delta = h.max_degree() as u64;
    let counts = path_counts(h, cutoff);
    let mut power = ExactCount::one();
    for k in 2..=cutoff {
        if k > 2 {
            power = &power * delta;
        }
        if counts[k - 1] < power {
            return Ok(k);
        }
    }
    Err(Error::CutoffExceeded { cutoff })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleThreshold {
    pub threshold: usize,
    pub cutoff: usize,
    pub bipartite_loopless: bool,
}

/// Least `ℓ` such that `trace(A^k)·Δ² < (c·Δ² + 1)·Δ^k` for every `k` in
/// `[ℓ, cutoff]`, with `c = 2` for loopless bipartite `H` and `c = 1`
/// otherwise.
pub fn cycle_bound_threshold(h: &HGraph) -> Result<CycleThreshold> {
    cycle_bound_threshold_with_cutoff(h, default_cutoff(h))
}

pub fn cycle_bound_threshold_with_cutoff(h: &HGraph, cutoff: usize) -> Result<CycleThreshold> {
    if !h.is_regular() {
        return Err(Error::NotApplicable("target is not regular".into()));
    }
    if !h.is_connected() {
        return Err(Error::NotApplicable("target is not connected".into()));
    }
    let delta = h.max_degree() as u64;
    if delta == 0 {
        return Err(Error::NotApplicable("target has no edges".into()));
    }
    if cutoff < 3 {
        return Err(Error::InvalidParameter("cutoff must be at least 3".into()));
    }
    let bipartite = h.is_loopless_bipartite();
    let c = if bipartite { 2 } else { 1 };
    let factor = ExactCount::from(c * delta * delta + 1);
    let d2 = delta * delta;
    let traces = cycle_counts(h, cutoff);
    let mut power = ExactCount::pow(delta, 3);
    let mut threshold = None;
    for k in 3..=cutoff {
        if k > 3 {
            power = &power * delta;
        }
        let holds = &traces[k - 3] * d2 < &factor * &power;
        match (holds, threshold) {
            (true, None) => threshold = Some(k),
            (false, _) => threshold = None,
            _ => {}
        }
    }
    match threshold {
        Some(threshold) => Ok(CycleThreshold {
            threshold,
            cutoff,
            bipartite_loopless: bipartite,
        }),
        None => Err(Error::CutoffExceeded { cutoff }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma10Report {
    pub k: usize,
    pub delta: usize,
    pub bound: ExactCount,
    pub max: Option<PairWitness>,
    pub verdict: Verdict<PairWitness>,
}

impl Lemma10Report {
    pub fn status(&self) -> &'static str {
        match self.verdict {
            Verdict::Confirmed => "PASS",
            Verdict::Violated { .. } => "FAIL",
            Verdict::NotApplicable { .. } => "N/A",
        }
    }
}

fn not_applicable(k: usize, delta: usize, reason: &str) -> Lemma10Report {
    Lemma10Report {
        k,
        delta,
        bound: ExactCount::zero(),
        max: None,
        verdict: Verdict::NotApplicable {
            reason: reason.to_string(),
        },
    }
}

/// Checks that every endpoint-pinned count `(A^{k-1})_{ij}` is at most
/// `(Δ² - 1)·Δ^{k-4}`.
pub fn check_lemma10(h: &HGraph, k: usize) -> Result<Lemma10Report> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 4, got {k}"
        )));
    }
    let delta = h.max_degree();
    let cert = h_certificate(h);
    if delta > 0 && delta <= 32 {
        let kdd = HGraph::from_simple(&complete_bipartite(delta, delta))?;
        if cert == h_certificate(&kdd) {
            return Ok(not_applicable(
                k,
                delta,
                "target is a complete bipartite K_{d,d}",
            ));
        }
    }
    if cert == h_certificate(&looped_complete(delta)) {
        return Ok(not_applicable(
            k,
            delta,
            "target is a complete looped graph",
        ));
    }
    if delta == 0 {
        return Ok(not_applicable(k, delta, "target has no edges"));
    }
    if !h.is_connected() {
        return Ok(not_applicable(k, delta, "target is not connected"));
    }
    let d = delta as u64;
    let bound = ExactCount::from(d * d - 1) * ExactCount::pow(d, (k - 4) as u32);
    let m = walk_matrix_power(h, k - 1);
    let mut max: Option<PairWitness> = None;
    let mut over = Vec::new();
    for (j, col) in m.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            let w = PairWitness {
                i,
                j,
                count: x.clone(),
            };
            if max.as_ref().is_none_or(|b| x > &b.count) {
                max = Some(w.clone());
            }
            if x > &bound {
                over.push(w);
            }
        }
    }
    over.sort_by_key(|w| (w.i, w.j));
    Ok(Lemma10Report {
        k,
        delta,
        bound,
        max,
        verdict: Verdict::from_witnesses(over),
    })
}
