//! Walk counts through exact matrix-vector products with the adjacency
//! matrix of `H`. Loops are ordinary diagonal entries.

use crate::count::ExactCount;
use crate::graph::HGraph;

fn step(h: &HGraph, v: &[ExactCount]) -> Vec<ExactCount> {
    (0..h.q())
        .map(|i| h.neighbors(i).map(|j| &v[j]).sum())
        .collect()
}

fn unit(q: usize, i: usize) -> Vec<ExactCount> {
    let mut v = vec![ExactCount::zero(); q];
    v[i] = ExactCount::one();
    v
}

/// `hom(P_k, H)`: the sum of all entries of `A^{k-1}`. `P_0` is the empty
/// graph and has one homomorphism.
pub fn count_hom_path(k: usize, h: &HGraph) -> ExactCount {
    if k == 0 {
        return ExactCount::one();
    }
    let mut v = vec![ExactCount::one(); h.q()];
    for _ in 1..k {
        v = step(h, &v);
    }
    v.iter().sum()
}

/// `hom(P_k, H)` for `k = 1..=kmax`, index `k - 1`.
pub fn path_counts(h: &HGraph, kmax: usize) -> Vec<ExactCount> {
    let mut out = Vec::with_capacity(kmax);
    let mut v = vec![ExactCount::one(); h.q()];
    for k in 1..=kmax {
        if k > 1 {
            v = step(h, &v);
        }
        out.push(v.iter().sum());
    }
    out
}

/// `A^m` as a dense matrix.
pub fn walk_matrix_power(h: &HGraph, m: usize) -> Vec<Vec<ExactCount>> {
    (0..h.q())
        .map(|j| {
            let mut v = unit(h.q(), j);
            for _ in 0..m {
                v = step(h, &v);
            }
            v
        })
        .collect()
}

/// `hom(C_n, H) = trace(A^n)`.
///
/// # Panics
/// If `n < 3`.
pub fn count_hom_cycle(n: usize, h: &HGraph) -> ExactCount {
    assert!(n >= 3, "cycles need at least 3 vertices");
    (0..h.q())
        .map(|i| {
            let mut v = unit(h.q(), i);
            for _ in 0..n {
                v = step(h, &v);
            }
            v.swap_remove(i)
        })
        .sum()
}

/// `trace(A^k)` for `k = 3..=kmax`, index `k - 3`.
pub fn cycle_counts(h: &HGraph, kmax: usize) -> Vec<ExactCount> {
    let q = h.q();
    let mut vecs: Vec<Vec<ExactCount>> = (0..q).map(|i| unit(q, i)).collect();
    let mut out = Vec::new();
    for k in 1..=kmax {
        for v in vecs.iter_mut() {
            *v = step(h, v);
        }
        if k >= 3 {
            out.push((0..q).map(|i| &vecs[i][i]).sum());
        }
    }
    out
}

/// Colorings of `P_k` with the first vertex on `i` and the last on `j`:
/// `(A^{k-1})_{ij}`.
///
/// # Panics
/// If `k < 1` or a vertex is out of range.
pub fn count_path_endpoints(k: usize, h: &HGraph, i: usize, j: usize) -> ExactCount {
    assert!(k >= 1 && i < h.q() && j < h.q());
    let mut v = unit(h.q(), j);
    for _ in 1..k {
        v = step(h, &v);
    }
    v.swap_remove(i)
}
