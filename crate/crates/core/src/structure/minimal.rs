use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::structure::{
    check_decomposition, is_2_connected, open_ear_decomposition, EarDecomposition,
};

/// Largest graph the chorded-cycle enumeration accepts.
pub const CHORD_ORACLE_LIMIT: usize = 10;

/// 2-connected, and deleting any edge destroys 2-connectivity.
pub fn is_minimally_2_connected(g: &SimpleGraph) -> Result<bool> {
    if !is_2_connected(g) {
        return Err(Error::NotApplicable("graph is not 2-connected".into()));
    }
    Ok(g.edges()
        .into_iter()
        .all(|(u, v)| !is_2_connected(&g.without_edge(u, v))))
}

/// Whether some cycle of `G` has a chord, by enumerating all cycles.
/// Limited to [`CHORD_ORACLE_LIMIT`] vertices.
pub fn has_chorded_cycle(g: &SimpleGraph) -> Result<bool> {
    let n = g.n();
    if n > CHORD_ORACLE_LIMIT {
        return Err(Error::LimitExceeded {
            what: "vertices for cycle enumeration",
            got: n,
            limit: CHORD_ORACLE_LIMIT,
        });
    }
    let adj = g.adjacency_masks();
    fn extend(adj: &[u64], start: usize, v: usize, mask: u64, len: usize) -> bool {
        for w in 0..adj.len() {
            if (adj[v] >> w) & 1 == 0 {
                continue;
            }
            if w == start && len >= 3 {
                let inside: u32 = (0..adj.len())
                    .filter(|&x| (mask >> x) & 1 == 1)
                    .map(|x| (adj[x] & mask).count_ones())
                    .sum();
                if inside as usize / 2 > len {
                    return true;
                }
            } else if w > start
                && (mask >> w) & 1 == 0
                && extend(adj, start, w, mask | (1 << w), len + 1)
            {
                return true;
            }
        }
        false
    }
    Ok((0..n).any(|s| extend(&adj, s, s, 1 << s, 1)))
}

/// Open ear decomposition whose first `long_ears` ears have at least four
/// vertices and whose remaining ears have exactly three, each with endpoints
/// on `Q_0..Q_c` and a middle vertex of degree two in `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalFormEars {
    pub decomposition: EarDecomposition,
    pub long_ears: usize,
}

/// Builds the normal form for a minimally 2-connected graph. Any open ear
/// decomposition of such a graph has no single-edge ears and every 3-vertex
/// ear has a degree-2 middle vertex, so moving the 3-vertex ears to the end
/// keeps it valid.
pub fn normal_form_ears(g: &SimpleGraph) -> Result<NormalFormEars> {
    if !is_minimally_2_connected(g)? {
        return Err(Error::NotApplicable(
            "graph is not minimally 2-connected".into(),
        ));
    }
    let dec = open_ear_decomposition(g)?;
    if let Some(e) = dec.ears.iter().find(|e| e.len() == 2) {
        return Err(Error::InvalidDecomposition(format!(
            "single-edge ear {:?} in a minimally 2-connected graph",
            e.vertices
        )));
    }
    let (long, short): (Vec<_>, Vec<_>) = dec.ears.into_iter().partition(|e| e.len() >= 4);
    let nf = NormalFormEars {
        long_ears: long.len(),
        decomposition: EarDecomposition {
            cycle: dec.cycle,
            ears: long.into_iter().chain(short).collect(),
        },
    };
    check_normal_form(g, &nf)?;
    Ok(nf)
}

/// Validates the normal-form invariants on top of the open-ear checker.
/// Short-ear endpoints may lie on `Q_0` as well as on the long ears.
pub fn check_normal_form(g: &SimpleGraph, nf: &NormalFormEars) -> Result<()> {
    let dec = &nf.decomposition;
    check_decomposition(g, dec, true)?;
    let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
    if nf.long_ears > dec.ears.len() {
        return bad("long-ear count exceeds ear count".into());
    }
    let mut head = vec![false; g.n()];
    for &v in &dec.cycle {
        head[v] = true;
    }
    for (i, ear) in dec.ears[..nf.long_ears].iter().enumerate() {
        if ear.len() < 4 {
            return bad(format!("ear {} should have at least 4 vertices", i + 1));
        }
        for &v in &ear.vertices {
            head[v] = true;
        }
    }
    for (i, ear) in dec.ears[nf.long_ears..].iter().enumerate() {
        let label = nf.long_ears + i + 1;
        if ear.len() != 3 {
            return bad(format!("ear {label} should have exactly 3 vertices"));
        }
        let (s, m, t) = (ear.vertices[0], ear.vertices[1], ear.vertices[2]);
        if !head[s] || !head[t] {
            return bad(format!("ear {label} endpoints leave Q_0..Q_c"));
        }
        if g.degree(m) != 2 {
            return bad(format!(
                "ear {label} middle vertex {m} has degree {}",
                g.degree(m)
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle};

    fn prism() -> SimpleGraph {
        SimpleGraph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimally_2_connected(&cycle(6)).unwrap());
        assert!(!is_minimally_2_connected(&complete(4)).unwrap());
        assert!(is_minimally_2_connected(&complete_bipartite(2, 3)).unwrap());
        assert!(is_minimally_2_connected(&crate::graph::path(3)).is_err());
    }

    #[test]
    fn chord_oracle_examples() {
        assert!(!has_chorded_cycle(&cycle(7)).unwrap());
        assert!(has_chorded_cycle(&complete(4)).unwrap());
        assert!(!has_chorded_cycle(&complete_bipartite(2, 4)).unwrap());
        assert!(has_chorded_cycle(&complete_bipartite(3, 3)).unwrap());
        assert!(has_chorded_cycle(&SimpleGraph::empty(11)).is_err());
    }

    #[test]
    fn normal_form_of_k23_and_cycle() {
        let nf = normal_form_ears(&complete_bipartite(2, 3)).unwrap();
        assert_eq!(nf.long_ears, 0);
        assert_eq!(nf.decomposition.ears.len(), 1);
        let nf = normal_form_ears(&cycle(5)).unwrap();
        assert_eq!(nf.long_ears, 0);
        assert!(nf.decomposition.ears.is_empty());
    }

    #[test]
    fn prism_is_not_minimal() {
        // each triangle edge is a chord of a 4- or 5-cycle
        assert!(!is_minimally_2_connected(&prism()).unwrap());
        assert!(normal_form_ears(&prism()).is_err());
    }

    #[test]
    fn theta_with_long_ear() {
        // C_6 with a 4-vertex ear between 0 and 3 plus a 3-vertex ear 0-8-3
        let g = SimpleGraph::from_edges(
            9,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (0, 6),
                (6, 7),
                (7, 3),
                (0, 8),
                (8, 3),
            ],
        )
        .unwrap();
        let nf = normal_form_ears(&g).unwrap();
        check_normal_form(&g, &nf).unwrap();
        assert_eq!(nf.decomposition.ears.len(), 2);
    }
}
