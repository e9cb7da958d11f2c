use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Outcome of searching for a path that meets a cycle only at its ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Attachment {
    /// A path on at least three vertices; endpoints on the cycle, interior
    /// off it.
    Path(Vec<usize>),
    /// Only chords attach to the cycle.
    OnlyChords,
    None,
}

/// Looks for an ear on at least three vertices attached to the cycle `c`
/// (a cyclic vertex sequence of `G`). Returns a shortest one found from the
/// first cycle vertex that has one.
pub fn find_attached_path(g: &SimpleGraph, c: &[usize]) -> Result<Attachment> {
    let n = g.n();
    let mut on_cycle = vec![false; n];
    for &v in c {
        if v >= n || on_cycle[v] {
            return Err(Error::InvalidParameter(
                "cycle repeats or leaves the vertex range".into(),
            ));
        }
        on_cycle[v] = true;
    }
    if c.len() < 3 || (0..c.len()).any(|i| !g.has_edge(c[i], c[(i + 1) % c.len()])) {
        return Err(Error::InvalidParameter(
            "vertex sequence is not a cycle of G".into(),
        ));
    }
    for &u in c {
        for &b in g.neighbors(u) {
            if on_cycle[b] {
                continue;
            }
            let mut parent = vec![usize::MAX; n];
            parent[b] = b;
            let mut queue = VecDeque::from([b]);
            while let Some(x) = queue.pop_front() {
                let hit = g
                    .neighbors(x)
                    .iter()
                    .copied()
                    .find(|&w| on_cycle[w] && w != u);
                if let Some(w) = hit {
                    let mut path = vec![w, x];
                    let mut cur = x;
                    while cur != b {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.push(u);
                    path.reverse();
                    return Ok(Attachment::Path(path));
                }
                for &y in g.neighbors(x) {
                    if !on_cycle[y] && parent[y] == usize::MAX {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    let cycle_edges = c.len();
    let inside = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| on_cycle[a] && on_cycle[b])
        .count();
    Ok(if inside > cycle_edges {
        Attachment::OnlyChords
    } else {
        Attachment::None
    })
}
