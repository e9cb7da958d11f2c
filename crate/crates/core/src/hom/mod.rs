//! Exact homomorphism counts `hom(G, H)`.
//!
//! Four independent routes are provided and must agree wherever more than
//! one applies: backtracking with forward checking (any `G`), rooted dynamic
//! programming (forests), walk counting with exact matrix-vector products
//! (paths, cycles) and closed forms (stars, `K_{2,n-2}`, cycles into `K_q`).
//! [`count_hom`] dispatches per connected component.

mod backtrack;
mod closed_form;
mod forest;
mod walks;

use std::collections::BTreeMap;

pub use backtrack::{count_hom_backtrack, count_hom_backtrack_pinned};
pub use closed_form::{closed_form_cycle_kq, closed_form_k2, closed_form_star};
pub use forest::count_hom_forest;
pub use walks::{
    count_hom_cycle, count_hom_path, count_path_endpoints, cycle_counts, path_counts,
    walk_matrix_power,
};

use crate::count::ExactCount;
use crate::graph::{HGraph, SimpleGraph};

/// Partial map from source vertices to target vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment(BTreeMap<usize, usize>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Pins `source -> target`, replacing any earlier pin of `source`.
    pub fn pin(mut self, source: usize, target: usize) -> Self {
        self.0.insert(source, target);
        self
    }

    pub fn get(&self, source: usize) -> Option<usize> {
        self.0.get(&source).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks every pin refers to an existing vertex on both sides.
    pub fn is_valid_for(&self, g: &SimpleGraph, h: &HGraph) -> bool {
        self.iter().all(|(x, i)| x < g.n() && i < h.q())
    }
}

impl FromIterator<(usize, usize)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        Assignment(iter.into_iter().collect())
    }
}

/// `hom(G, H)`. Tree components use the forest DP, cycle components use
/// `trace(A^n)`, everything else backtracks. The empty graph has one
/// homomorphism.
pub fn count_hom(g: &SimpleGraph, h: &HGraph) -> ExactCount {
    let mut total = ExactCount::one();
    for comp in g.components() {
        let sub = g.induced(&comp);
        let c = if sub.is_tree() {
            count_hom_forest(&sub, h).expect("tree component")
        } else if sub.is_cycle() {
            count_hom_cycle(sub.n(), h)
        } else {
            count_hom_backtrack(&sub, h)
        };
        if c.is_zero() {
            return c;
        }
        total *= &c;
    }
    total
}

/// Number of homomorphisms extending `pins`. A pin set that already
/// violates an edge of `G` gives zero.
///
/// # Panics
/// If a pin names a vertex outside `G` or `H`.
pub fn count_hom_restricted(g: &SimpleGraph, h: &HGraph, pins: &Assignment) -> ExactCount {
    assert!(pins.is_valid_for(g, h), "assignment out of range");
    count_hom_backtrack_pinned(g, h, pins)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete, complete_bipartite, cycle, looped_complete, parse_hgraph, path, petersen, star,
        widom_rowlinson,
    };

    fn k(q: usize) -> HGraph {
        HGraph::from_simple(&complete(q)).unwrap()
    }

    fn h_ind() -> HGraph {
        parse_hgraph("2\n11\n10").unwrap()
    }

    /// Enumerates all `q^n` maps.
    fn brute(g: &SimpleGraph, h: &HGraph) -> u64 {
        let (n, q) = (g.n(), h.q());
        let edges = g.edges();
        let mut colors = vec![0usize; n];
        let mut count = 0;
        loop {
            if edges.iter().all(|&(u, v)| h.adjacent(colors[u], colors[v])) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                colors[i] += 1;
                if colors[i] < q {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn spec_examples() {
        assert_eq!(count_hom(&cycle(5), &k(3)), 30);
        assert_eq!(count_hom(&star(5), &looped_complete(2)), 32);
        assert_eq!(brute(&path(3), &h_ind()), 5);
        assert_eq!(count_hom(&path(3), &h_ind()), 5);
        assert_eq!(count_hom(&SimpleGraph::empty(0), &k(3)), 1);
    }

    #[test]
    fn restricted_examples() {
        let k3 = k(3);
        assert_eq!(
            count_hom_restricted(&path(2), &k3, &Assignment::new().pin(0, 0)),
            2
        );
        // middle of P_3 on the unlooped vertex of H_ind forces both leaves
        // onto the looped vertex
        let h = h_ind();
        assert_eq!(
            count_hom_restricted(&path(3), &h, &Assignment::new().pin(1, 1)),
            1
        );
        let total = Assignment::from_iter([(0, 0), (1, 1), (2, 2), (3, 0), (4, 1)]);
        assert_eq!(count_hom_restricted(&cycle(5), &k3, &total), 1);
        let clash = Assignment::new().pin(0, 1).pin(1, 1);
        assert_eq!(count_hom_restricted(&path(2), &k3, &clash), 0);
    }

    #[test]
    fn pinning_decomposes_total() {
        let pool = [
            k(3),
            h_ind(),
            widom_rowlinson(2),
            complete_target(&complete_bipartite(2, 2)),
        ];
        let graphs = [
            cycle(5),
            path(4),
            star(5),
            complete(4),
            petersen().induced(&[0, 1, 2, 5, 7]),
        ];
        for h in &pool {
            for g in &graphs {
                for x in 0..g.n() {
                    let sum: ExactCount = (0..h.q())
                        .map(|i| count_hom_restricted(g, h, &Assignment::new().pin(x, i)))
                        .sum();
                    assert_eq!(sum, count_hom(g, h));
                }
            }
        }
    }

    fn complete_target(g: &SimpleGraph) -> HGraph {
        HGraph::from_simple(g).unwrap()
    }

    #[test]
    fn engines_match_brute_force_small() {
        let targets = [
            k(3),
            h_ind(),
            widom_rowlinson(2),
            HGraph::from_simple(&path(3)).unwrap(),
            looped_complete(2),
            complete_target(&complete_bipartite(2, 2)),
        ];
        let sources = [
            SimpleGraph::empty(3),
            path(1),
            path(5),
            star(5),
            cycle(3),
            cycle(6),
            complete(4),
            complete_bipartite(2, 3),
            cycle(3).disjoint_union(&path(2)),
        ];
        for h in &targets {
            for g in &sources {
                let b = brute(g, h);
                assert_eq!(count_hom(g, h), b, "{g:?} {h:?}");
                assert_eq!(count_hom_backtrack(g, h), b, "{g:?} {h:?}");
                if let Some(f) = count_hom_forest(g, h) {
                    assert_eq!(f, b);
                }
            }
        }
    }
}
