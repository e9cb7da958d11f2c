use crate::count::ExactCount;
use crate::graph::{HGraph, SimpleGraph};

/// Rooted DP over each tree component: `table[v][c]` counts colorings of the
/// subtree at `v` with `v -> c`, and a child `u` contributes the factor
/// `sum_{d ~ c} table[u][d]`. Returns `None` when `G` has a cycle.
pub fn count_hom_forest(g: &SimpleGraph, h: &HGraph) -> Option<ExactCount> {
    if !g.is_forest() {
        return None;
    }
    let q = h.q();
    let n = g.n();
    let mut table: Vec<Vec<ExactCount>> = vec![Vec::new(); n];
    let mut total = ExactCount::one();
    for comp in g.components() {
        let root = comp[0];
        // iterative DFS; `order` lists parents before children
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(comp.len());
        let mut stack = vec![root];
        parent[root] = root;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in g.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        for &v in order.iter().rev() {
            let mut row = vec![ExactCount::one(); q];
            for &u in g.neighbors(v) {
                if u == parent[v] {
                    continue;
                }
                for (c, slot) in row.iter_mut().enumerate() {
                    let factor: ExactCount = h.neighbors(c).map(|d| &table[u][d]).sum();
                    *slot *= &factor;
                }
                table[u] = Vec::new();
            }
            table[v] = row;
        }
        let comp_total: ExactCount = table[root].iter().sum();
        if comp_total.is_zero() {
            return Some(comp_total);
        }
        total *= &comp_total;
    }
    Some(total)
}
