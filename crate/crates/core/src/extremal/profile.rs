use serde::Serialize;

use crate::count::ExactCount;
use crate::graph::HGraph;

/// Degree data and `s(H)`, the number of ordered pairs `(i, j)` (not
/// necessarily distinct) with `|N(i) ∩ N(j)| = Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HProfile {
    pub delta: usize,
    pub v_eq_delta: Vec<usize>,
    pub s: ExactCount,
    pub regular: bool,
    pub connected: bool,
    pub bipartite_loopless: bool,
}

pub fn profile(h: &HGraph) -> HProfile {
    let delta = h.max_degree();
    let q = h.q();
    let v_eq_delta = (0..q).filter(|&i| h.degree(i) == delta).collect();
    let mut s = 0u64;
    for i in 0..q {
        for j in 0..q {
            if (h.row(i) & h.row(j)).count_ones() as usize == delta {
                s += 1;
            }
        }
    }
    HProfile {
        delta,
        v_eq_delta,
        s: ExactCount::from(s),
        regular: h.is_regular(),
        connected: h.is_connected(),
        bipartite_loopless: h.is_loopless_bipartite(),
    }
}
