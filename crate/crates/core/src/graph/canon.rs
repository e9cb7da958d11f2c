//! Canonical labeling and isomorphism certificates.
//!
//! General graphs go through individualization-refinement: equitable
//! partition refinement, branching on the first smallest non-singleton cell,
//! and keeping the lexicographically least relabelled adjacency over all
//! leaves. Automorphisms discovered at leaves prune the search (orbit pruning
//! and backjumping to the divergence point). Trees use a centered AHU
//! encoding instead.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{HGraph, SimpleGraph};

/// Largest vertex count accepted by the canonical labeling routines.
pub const MAX_CANON_VERTICES: usize = 64;

const TAG_TREE: u8 = b'T';
const TAG_GRAPH: u8 = b'G';
const TAG_TARGET: u8 = b'H';

/// Byte string identifying an isomorphism class. Certificates of source
/// graphs and target graphs never collide.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphCertificate(Vec<u8>);

impl GraphCertificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }
}

impl fmt::Display for GraphCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for GraphCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphCertificate({})", self.to_hex())
    }
}

impl Serialize for GraphCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_CANON_VERTICES {
        return Err(Error::LimitExceeded {
            what: "vertices for canonical labeling",
            got: n,
            limit: MAX_CANON_VERTICES,
        });
    }
    Ok(())
}

pub fn certificate(g: &SimpleGraph) -> Result<GraphCertificate> {
    canonical_form(g).map(|(c, _)| c)
}

/// Certificate together with the canonically relabelled graph. Isomorphic
/// inputs yield identical outputs.
pub fn canonical_form(g: &SimpleGraph) -> Result<(GraphCertificate, SimpleGraph)> {
    check_size(g.n())?;
    if g.is_tree() {
        let (code, labeling) = tree_canonical(g);
        let mut bytes = header(TAG_TREE, g.n());
        bytes.extend(code);
        return Ok((GraphCertificate(bytes), g.relabel(&labeling)));
    }
    let adj = g.adjacency_masks();
    let colors = vec![0u8; g.n()];
    let labeling = canonical_labeling(&adj, &colors);
    let rows = permuted_rows(&adj, &labeling);
    let mut bytes = header(TAG_GRAPH, g.n());
    for r in &rows {
        bytes.extend_from_slice(&r.to_be_bytes());
    }
    Ok((GraphCertificate(bytes), g.relabel(&labeling)))
}

/// Certificate of a target graph; loops are respected.
pub fn h_certificate(h: &HGraph) -> GraphCertificate {
    h_canonical_form(h).0
}

pub fn h_canonical_form(h: &HGraph) -> (GraphCertificate, HGraph) {
    let q = h.q();
    let colors: Vec<u8> = (0..q).map(|i| h.has_loop(i) as u8).collect();
    let adj: Vec<u64> = (0..q).map(|i| h.row(i) & !(1u64 << i)).collect();
    let labeling = canonical_labeling(&adj, &colors);
    let mut pos_colors = vec![0u8; q];
    for v in 0..q {
        pos_colors[labeling[v]] = colors[v];
    }
    let rows = permuted_rows(&adj, &labeling);
    let mut bytes = header(TAG_TARGET, q);
    bytes.extend_from_slice(&pos_colors);
    for r in &rows {
        bytes.extend_from_slice(&r.to_be_bytes());
    }
    let canon_rows: Vec<u64> = rows
        .iter()
        .enumerate()
        .map(|(p, &r)| r | ((pos_colors[p] as u64) << p))
        .collect();
    let canon = HGraph::from_rows(canon_rows).expect("relabelled target graph is valid");
    (GraphCertificate(bytes), canon)
}

fn header(tag: u8, n: usize) -> Vec<u8> {
    vec![tag, (n >> 8) as u8, n as u8]
}

/// `out[labeling[v]]` is the relabelled neighborhood of `v`.
fn permuted_rows(adj: &[u64], labeling: &[usize]) -> Vec<u64> {
    let n = adj.len();
    let mut out = vec![0u64; n];
    for v in 0..n {
        let mut r = 0u64;
        let mut bits = adj[v];
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            r |= 1 << labeling[w];
        }
        out[labeling[v]] = r;
    }
    out
}

/// Returns `labeling[v]` = canonical position of `v`.
fn canonical_labeling(adj: &[u64], colors: &[u8]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let mut initial: Vec<Vec<usize>> = Vec::new();
    let mut palette: Vec<u8> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    for c in palette {
        initial.push((0..n).filter(|&v| colors[v] == c).collect());
    }
    let mut search = Search {
        adj,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut prefix = Vec::new();
    search.visit(initial, &mut prefix);
    search
        .best
        .expect("search reaches at least one leaf")
        .labeling
}

struct Leaf {
    rows: Vec<u64>,
    labeling: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Splits cells until the ordered partition is equitable. The result
    /// depends only on the isomorphism type of (graph, partition).
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        'outer: loop {
            for s in 0..cells.len() {
                let splitter = cells[s].iter().fold(0u64, |m, &v| m | (1 << v));
                for t in 0..cells.len() {
                    if cells[t].len() == 1 {
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> = cells[t]
                        .iter()
                        .map(|&v| ((self.adj[v] & splitter).count_ones(), v))
                        .collect();
                    if keyed.iter().all(|&(k, _)| k == keyed[0].0) {
                        continue;
                    }
                    keyed.sort_unstable();
                    let mut parts: Vec<Vec<usize>> = Vec::new();
                    let mut last = None;
                    for (k, v) in keyed {
                        if last != Some(k) {
                            parts.push(Vec::new());
                            last = Some(k);
                        }
                        parts.last_mut().unwrap().push(v);
                    }
                    cells.splice(t..t + 1, parts);
                    continue 'outer;
                }
            }
            return cells;
        }
    }

    /// Returns `Some(depth)` to unwind to the node at `depth` after an
    /// automorphism showed the rest of the current subtree is redundant.
    fn visit(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) -> Option<usize> {
        let cells = self.refine(cells);
        if cells.iter().all(|c| c.len() == 1) {
            return self.leaf(&cells, prefix);
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .unwrap();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !explored.is_empty() {
                let orbits = self.orbits_fixing(prefix);
                if explored.iter().any(|&u| orbits.find(u) == orbits.find(v)) {
                    continue;
                }
            }
            explored.push(v);
            let rest: Vec<usize> = cells[target].iter().copied().filter(|&w| w != v).collect();
            let mut child = cells.clone();
            child.splice(target..target + 1, [vec![v], rest]);
            prefix.push(v);
            let r = self.visit(child, prefix);
            prefix.pop();
            if let Some(d) = r {
                if d < prefix.len() {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[Vec<usize>], prefix: &[usize]) -> Option<usize> {
        let n = self.adj.len();
        let mut labeling = vec![0usize; n];
        for (p, c) in cells.iter().enumerate() {
            labeling[c[0]] = p;
        }
        let rows = permuted_rows(self.adj, &labeling);
        let leaf = Leaf {
            rows,
            labeling,
            path: prefix.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                rows: leaf.rows.clone(),
                labeling: leaf.labeling.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if leaf.rows == first.rows {
            let gamma = automorphism(&first.labeling, &leaf.labeling);
            let back = common_prefix(&first.path, &leaf.path);
            self.generators.push(gamma);
            return Some(back);
        }
        let best = self.best.as_ref().unwrap();
        match leaf.rows.cmp(&best.rows) {
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let gamma = automorphism(&best.labeling, &leaf.labeling);
                let back = common_prefix(&best.path, &leaf.path);
                self.generators.push(gamma);
                Some(back)
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    fn orbits_fixing(&self, prefix: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.adj.len());
        for g in &self.generators {
            if prefix.iter().all(|&p| g[p] == p) {
                for (v, &w) in g.iter().enumerate() {
                    uf.union(v, w);
                }
            }
        }
        uf
    }
}

/// The automorphism sending each vertex of leaf `a` to the vertex holding
/// the same position in leaf `b`.
fn automorphism(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut inv_b = vec![0usize; b.len()];
    for (v, &p) in b.iter().enumerate() {
        inv_b[p] = v;
    }
    a.iter().map(|&p| inv_b[p]).collect()
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Centered AHU encoding. Returns the code and a labeling (preorder from the
/// chosen center, children in code order).
fn tree_canonical(g: &SimpleGraph) -> (Vec<u8>, Vec<usize>) {
    let centers = tree_centers(g);
    let mut best: Option<(Vec<u8>, usize)> = None;
    for &c in &centers {
        let code = rooted_code(g, c, usize::MAX);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            best = Some((code, c));
        }
    }
    let (code, root) = best.unwrap();
    let mut labeling = vec![0usize; g.n()];
    let mut next = 0;
    assign_preorder(g, root, usize::MAX, &mut labeling, &mut next);
    (code, labeling)
}

fn tree_centers(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &w in g.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(g: &SimpleGraph, v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(g, w, v))
        .collect();
    children.sort();
    let mut out = vec![b'('];
    for c in children {
        out.extend(c);
    }
    out.push(b')');
    out
}

fn assign_preorder(
    g: &SimpleGraph,
    v: usize,
    parent: usize,
    labeling: &mut [usize],
    next: &mut usize,
) {
    labeling[v] = *next;
    *next += 1;
    let mut children: Vec<(Vec<u8>, usize)> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| (rooted_code(g, w, v), w))
        .collect();
    children.sort();
    for (_, w) in children {
        assign_preorder(g, w, v, labeling, next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen, star};

    fn shuffled(g: &SimpleGraph, seed: u64) -> SimpleGraph {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        for i in (1..n).rev() {
            s = s
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let j = (s >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        g.relabel(&perm)
    }

    #[test]
    fn path_relabel_invariant() {
        let p4 = path(4);
        for seed in 0..20 {
            assert_eq!(
                certificate(&p4).unwrap(),
                certificate(&shuffled(&p4, seed)).unwrap()
            );
        }
        assert_ne!(certificate(&p4).unwrap(), certificate(&star(4)).unwrap());
    }

    #[test]
    fn canonical_graph_is_fixed_point() {
        for g in [
            petersen(),
            cycle(6),
            complete(5),
            star(7),
            SimpleGraph::empty(16),
        ] {
            let (c, canon) = canonical_form(&g).unwrap();
            let (c2, canon2) = canonical_form(&shuffled(&g, 9)).unwrap();
            assert_eq!(c, c2);
            assert_eq!(canon, canon2);
            assert_eq!(canonical_form(&canon).unwrap().1, canon);
        }
    }

    #[test]
    fn distinguishes_cospectral_style_pairs() {
        // C6 vs two triangles: both 2-regular on 6 vertices
        let two_triangles = cycle(3).disjoint_union(&cycle(3));
        assert_ne!(
            certificate(&cycle(6)).unwrap(),
            certificate(&two_triangles).unwrap()
        );
    }

    #[test]
    fn highly_symmetric_sixteen_vertex_graphs() {
        let k8_8 = crate::graph::complete_bipartite(8, 8);
        let e16 = SimpleGraph::empty(16);
        let k16 = complete(16);
        for g in [k8_8, e16, k16] {
            assert_eq!(
                certificate(&g).unwrap(),
                certificate(&shuffled(&g, 3)).unwrap()
            );
        }
    }

    #[test]
    fn size_limit() {
        assert!(matches!(
            certificate(&SimpleGraph::empty(65)),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn loops_respected_for_targets() {
        let h_ind_a = HGraph::from_rows(vec![0b11, 0b01]).unwrap();
        let h_ind_b = HGraph::from_rows(vec![0b10, 0b11]).unwrap();
        let k2 = HGraph::from_rows(vec![0b10, 0b01]).unwrap();
        assert_eq!(h_certificate(&h_ind_a), h_certificate(&h_ind_b));
        assert_ne!(h_certificate(&h_ind_a), h_certificate(&k2));
        assert_eq!(h_canonical_form(&h_ind_a).1, h_canonical_form(&h_ind_b).1);
    }
}
