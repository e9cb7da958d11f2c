use crate::count::ExactCount;
use crate::graph::HGraph;

/// `hom(K_{1,n-1}, H) = sum_i d(i)^{n-1}`.
pub fn closed_form_star(n: usize, h: &HGraph) -> ExactCount {
    assert!(n >= 1);
    (0..h.q())
        .map(|i| ExactCount::pow(h.degree(i) as u64, (n - 1) as u32))
        .sum()
}

/// `hom(K_{2,n-2}, H) = sum_{(i,j)} |N(i) ∩ N(j)|^{n-2}` over ordered pairs.
pub fn closed_form_k2(n: usize, h: &HGraph) -> ExactCount {
    assert!(n >= 3);
    let q = h.q();
    let mut total = ExactCount::zero();
    for i in 0..q {
        for j in 0..q {
            let common = (h.row(i) & h.row(j)).count_ones() as u64;
            total += ExactCount::pow(common, (n - 2) as u32);
        }
    }
    total
}

/// `hom(C_n, K_q) = (q-1)^n + (-1)^n (q-1)`.
pub fn closed_form_cycle_kq(n: usize, q: usize) -> ExactCount {
    assert!(n >= 3 && q >= 1);
    let main = ExactCount::pow(q as u64 - 1, n as u32);
    let tail = ExactCount::from(q as u64 - 1);
    if n.is_multiple_of(2) {
        main + tail
    } else {
        main.checked_sub(&tail).expect("(q-1)^n >= q-1 for n >= 1")
    }
}
