use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::structure::{is_2_connected, is_2_edge_connected};

/// A path attached to earlier parts at its endpoints. Closed when both
/// endpoints coincide.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ear {
    pub vertices: Vec<usize>,
}

impl Ear {
    pub fn is_open(&self) -> bool {
        self.vertices.first() != self.vertices.last()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

/// `Q_0` as a cyclic vertex sequence (closing edge implied) followed by the
/// ears `Q_1..Q_l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EarDecomposition {
    pub cycle: Vec<usize>,
    pub ears: Vec<Ear>,
}

impl EarDecomposition {
    pub fn all_open(&self) -> bool {
        self.ears.iter().all(Ear::is_open)
    }
}

/// Whitney: every ear open. Rejects graphs that are not 2-connected.
pub fn open_ear_decomposition(g: &SimpleGraph) -> Result<EarDecomposition> {
    if !is_2_connected(g) {
        return Err(Error::NotApplicable("graph is not 2-connected".into()));
    }
    let dec = build(g, true).expect("2-connected graphs admit open ear decompositions");
    check_decomposition(g, &dec, true)?;
    Ok(dec)
}

/// Robbins: ears may be closed. Rejects graphs with a bridge.
pub fn ear_decomposition(g: &SimpleGraph) -> Result<EarDecomposition> {
    if !is_2_edge_connected(g) || g.n() < 3 {
        return Err(Error::NotApplicable("graph is not 2-edge-connected".into()));
    }
    let dec = build(g, false).expect("2-edge-connected graphs admit ear decompositions");
    check_decomposition(g, &dec, false)?;
    Ok(dec)
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Starts from the shortest cycle through the first edge of vertex 0, then
/// repeatedly takes the first unused edge leaving the covered part and
/// extends it along a shortest path through uncovered vertices back to the
/// covered part.
fn build(g: &SimpleGraph, open: bool) -> Option<EarDecomposition> {
    let n = g.n();
    let &first = g.neighbors(0).first()?;
    let mut used: HashSet<(usize, usize)> = HashSet::new();
    let mut covered = vec![false; n];

    // shortest path first -> 0 avoiding the edge {0, first}
    let back = bfs_path(g, first, |x, w| w == 0 && x != first, |x| x != 0)?;
    let mut cycle = vec![0];
    cycle.extend(back.iter().copied().take(back.len() - 1));
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        used.insert(key(a, b));
        covered[a] = true;
    }

    let edges = g.edges();
    let mut ears = Vec::new();
    loop {
        let next = edges.iter().find_map(|&(u, v)| {
            if used.contains(&(u, v)) {
                None
            } else if covered[u] {
                Some((u, v))
            } else if covered[v] {
                Some((v, u))
            } else {
                None
            }
        });
        let Some((a, b)) = next else { break };
        let vertices = if covered[b] {
            vec![a, b]
        } else {
            let tail = bfs_path(
                g,
                b,
                |x, w| covered[w] && !(x == b && w == a) && !(open && w == a),
                |x| !covered[x],
            )?;
            let mut vs = vec![a];
            vs.extend(tail);
            vs
        };
        for w in vertices.windows(2) {
            used.insert(key(w[0], w[1]));
        }
        for &v in &vertices {
            covered[v] = true;
        }
        ears.push(Ear { vertices });
    }
    (used.len() == edges.len()).then_some(EarDecomposition { cycle, ears })
}

/// BFS from `start` through vertices satisfying `passable`; stops at the
/// first popped `x` with a neighbor `w` such that `accept(x, w)`. Returns
/// `start..=x, w`.
fn bfs_path(
    g: &SimpleGraph,
    start: usize,
    accept: impl Fn(usize, usize) -> bool,
    passable: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if let Some(&w) = g.neighbors(x).iter().find(|&&w| accept(x, w)) {
            let mut path = vec![w, x];
            let mut cur = x;
            while cur != start {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if parent[y] == usize::MAX && passable(y) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Validates the partition property: `Q_0` is a cycle of `G`, each ear is a
/// path of `G` whose endpoints are already covered and whose interior is
/// new, no edge is used twice, and every edge and vertex ends up covered.
pub fn check_decomposition(
    g: &SimpleGraph,
    dec: &EarDecomposition,
    require_open: bool,
) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
    let n = g.n();
    let mut used: HashSet<(usize, usize)> = HashSet::new();
    let mut covered = vec![false; n];
    let c = &dec.cycle;
    if c.len() < 3 {
        return bad(format!("Q_0 has {} vertices", c.len()));
    }
    for &v in c {
        if v >= n || covered[v] {
            return bad(format!("Q_0 repeats or misses vertex {v}"));
        }
        covered[v] = true;
    }
    for i in 0..c.len() {
        let (a, b) = (c[i], c[(i + 1) % c.len()]);
        if !g.has_edge(a, b) {
            return bad(format!("Q_0 uses non-edge ({a}, {b})"));
        }
        used.insert(key(a, b));
    }
    for (idx, ear) in dec.ears.iter().enumerate() {
        let vs = &ear.vertices;
        let label = idx + 1;
        if vs.len() < 2 {
            return bad(format!("ear {label} has {} vertices", vs.len()));
        }
        if vs.iter().any(|&v| v >= n) {
            return bad(format!("ear {label} leaves the vertex range"));
        }
        let (s, t) = (vs[0], vs[vs.len() - 1]);
        if !covered[s] || !covered[t] {
            return bad(format!("ear {label} endpoint not on earlier parts"));
        }
        if s == t && vs.len() < 4 {
            return bad(format!("closed ear {label} too short"));
        }
        if require_open && s == t {
            return bad(format!("ear {label} is closed"));
        }
        for &v in ear.interior() {
            if covered[v] {
                return bad(format!("ear {label} interior vertex {v} already covered"));
            }
            covered[v] = true;
        }
        for w in vs.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return bad(format!("ear {label} uses non-edge ({}, {})", w[0], w[1]));
            }
            if !used.insert(key(w[0], w[1])) {
                return bad(format!("ear {label} reuses edge ({}, {})", w[0], w[1]));
            }
        }
    }
    if used.len() != g.edge_count() {
        return bad(format!(
            "{} of {} edges covered",
            used.len(),
            g.edge_count()
        ));
    }
    if let Some(v) = covered.iter().position(|&c| !c) {
        return bad(format!("vertex {v} not covered"));
    }
    Ok(())
}
