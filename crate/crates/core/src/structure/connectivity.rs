use crate::graph::SimpleGraph;

/// Low-link DFS shared by the cut-vertex and bridge searches. Iterative so
/// long paths from ingested graphs do not exhaust the stack.
struct LowLink {
    cut: Vec<bool>,
    bridges: Vec<(usize, usize)>,
}

fn low_link(g: &SimpleGraph) -> LowLink {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut cut = vec![false; n];
    let mut bridges = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*idx) {
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        cut[parent] = true;
                    }
                    if low[v] > disc[parent] {
                        bridges.push((parent.min(v), parent.max(v)));
                    }
                }
            }
        }
        if root_children > 1 {
            cut[root] = true;
        }
    }
    bridges.sort_unstable();
    LowLink { cut, bridges }
}

pub fn articulation_points(g: &SimpleGraph) -> Vec<usize> {
    let ll = low_link(g);
    (0..g.n()).filter(|&v| ll.cut[v]).collect()
}

pub fn bridges(g: &SimpleGraph) -> Vec<(usize, usize)> {
    low_link(g).bridges
}

/// At least three vertices, connected, no cut vertex.
pub fn is_2_connected(g: &SimpleGraph) -> bool {
    g.n() >= 3 && g.is_connected() && !low_link(g).cut.iter().any(|&c| c)
}

/// At least two vertices, connected, no bridge.
pub fn is_2_edge_connected(g: &SimpleGraph) -> bool {
    g.n() >= 2 && g.is_connected() && low_link(g).bridges.is_empty()
}
