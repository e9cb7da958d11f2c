use crate::count::ExactCount;
use crate::graph::{HGraph, SimpleGraph};
use crate::hom::Assignment;

/// Backtracking count over all of `G`.
pub fn count_hom_backtrack(g: &SimpleGraph, h: &HGraph) -> ExactCount {
    count_hom_backtrack_pinned(g, h, &Assignment::new())
}

/// Backtracking count of homomorphisms extending `pins`. Components are
/// counted separately and multiplied.
pub fn count_hom_backtrack_pinned(g: &SimpleGraph, h: &HGraph, pins: &Assignment) -> ExactCount {
    let full = crate::graph::HGraph::full_mask_for(h.q());
    let mut domains: Vec<u64> = vec![full; g.n()];
    for (x, i) in pins.iter() {
        domains[x] &= 1u64 << i;
    }
    let mut total = ExactCount::one();
    for comp in g.components() {
        let plan = Plan::new(g, &comp);
        let c = match plan.count::<u128>(h, &mut domains.clone()) {
            Some(c) => ExactCount::from(c),
            None => plan
                .count::<ExactCount>(h, &mut domains.clone())
                .expect("exact tally never overflows"),
        };
        if c.is_zero() {
            return c;
        }
        total *= &c;
    }
    total
}

/// Vertex order for one component plus, per position, the neighbors that
/// come later in the order.
struct Plan {
    order: Vec<usize>,
    later: Vec<Vec<usize>>,
}

impl Plan {
    /// Reverse degeneracy order: repeatedly strip a minimum-degree vertex,
    /// then color in the reverse of the stripping sequence so low-degree
    /// vertices are colored last.
    fn new(g: &SimpleGraph, comp: &[usize]) -> Plan {
        let mut alive = vec![false; g.n()];
        for &v in comp {
            alive[v] = true;
        }
        let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let mut stripped = Vec::with_capacity(comp.len());
        for _ in 0..comp.len() {
            let v = comp
                .iter()
                .copied()
                .filter(|&v| alive[v])
                .min_by_key(|&v| (deg[v], v))
                .unwrap();
            alive[v] = false;
            for &w in g.neighbors(v) {
                if alive[w] {
                    deg[w] -= 1;
                }
            }
            stripped.push(v);
        }
        stripped.reverse();
        let order = stripped;
        let mut position = vec![usize::MAX; g.n()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let later = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                g.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| position[w] > i && position[w] != usize::MAX)
                    .collect()
            })
            .collect();
        Plan { order, later }
    }

    fn count<T: Tally>(&self, h: &HGraph, domains: &mut [u64]) -> Option<T> {
        let mut trail = Vec::new();
        self.go(0, h, domains, &mut trail)
    }

    fn go<T: Tally>(
        &self,
        idx: usize,
        h: &HGraph,
        domains: &mut [u64],
        trail: &mut Vec<(usize, u64)>,
    ) -> Option<T> {
        if idx == self.order.len() {
            return Some(T::one());
        }
        let v = self.order[idx];
        let dom = domains[v];
        if dom == 0 {
            return Some(T::zero());
        }
        let later = &self.later[idx];
        if later.is_empty() {
            // no constraint flows forward: every choice for v is interchangeable
            let rest: T = self.go(idx + 1, h, domains, trail)?;
            return rest.mul_small(dom.count_ones());
        }
        let mut total = T::zero();
        let mut bits = dom;
        'colors: while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let row = h.row(c);
            let mark = trail.len();
            for &u in later {
                let narrowed = domains[u] & row;
                if narrowed != domains[u] {
                    trail.push((u, domains[u]));
                    domains[u] = narrowed;
                }
                if narrowed == 0 {
                    undo(domains, trail, mark);
                    continue 'colors;
                }
            }
            let sub: T = self.go(idx + 1, h, domains, trail)?;
            undo(domains, trail, mark);
            total = total.add(sub)?;
        }
        Some(total)
    }
}

fn undo(domains: &mut [u64], trail: &mut Vec<(usize, u64)>, mark: usize) {
    while trail.len() > mark {
        let (u, old) = trail.pop().unwrap();
        domains[u] = old;
    }
}

/// Accumulator for the search: `u128` with overflow detection, or exact.
trait Tally: Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(self, other: Self) -> Option<Self>;
    fn mul_small(self, k: u32) -> Option<Self>;
}

impl Tally for u128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(self, other: Self) -> Option<Self> {
        self.checked_add(other)
    }
    fn mul_small(self, k: u32) -> Option<Self> {
        self.checked_mul(k as u128)
    }
}

impl Tally for ExactCount {
    fn zero() -> Self {
        ExactCount::zero()
    }
    fn one() -> Self {
        ExactCount::one()
    }
    fn add(self, other: Self) -> Option<Self> {
        Some(self + other)
    }
    fn mul_small(self, k: u32) -> Option<Self> {
        Some(&self * k as u64)
    }
}
