//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library except to build inputs.

#![allow(dead_code)]

use homlab::{HGraph, SimpleGraph};

/// Edge list of the labeled graph on `n` vertices selected by `mask`, one
/// bit per pair in column order `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn labeled_edges(n: usize, mask: u64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if (mask >> bit) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    edges
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// Isomorphism-class key: least edge mask over all relabelings.
pub fn brute_canon(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    let index = |a: usize, b: usize| {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        j * (j - 1) / 2 + i
    };
    let _ = n;
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |m, &(u, v)| m | 1 << index(p[u], p[v]))
        })
        .min()
        .unwrap_or(0)
}

fn connected_mask(adj: &[u64], alive: u64) -> bool {
    if alive == 0 {
        return false;
    }
    let start = alive.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & alive & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == alive
}

pub fn brute_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let adj = adjacency(n, edges);
    connected_mask(&adj, (1u64 << n) - 1)
}

/// At least 3 vertices, connected, and connected after removing any vertex.
pub fn brute_2_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n < 3 {
        return false;
    }
    let adj = adjacency(n, edges);
    let all = (1u64 << n) - 1;
    connected_mask(&adj, all) && (0..n).all(|v| connected_mask(&adj, all & !(1 << v)))
}

/// At least 3 vertices, connected, and connected after removing any edge.
pub fn brute_2_edge_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n < 3 || !brute_connected(n, edges) {
        return false;
    }
    (0..edges.len()).all(|k| {
        let rest: Vec<_> = edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, &e)| e)
            .collect();
        brute_connected(n, &rest)
    })
}

/// Counts maps `V(G) -> V(H)` preserving adjacency by trying all of them.
pub fn brute_hom(n: usize, edges: &[(usize, usize)], h: &[Vec<u8>]) -> u128 {
    let q = h.len();
    if n == 0 {
        return 1;
    }
    if q == 0 {
        return 0;
    }
    let mut f = vec![0usize; n];
    let mut count = 0u128;
    loop {
        if edges.iter().all(|&(u, v)| h[f[u]][f[v]] == 1) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            f[i] += 1;
            if f[i] < q {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// Vertex-by-vertex extension in label order, checking edges back to
/// already placed vertices.
pub fn backtrack_hom(n: usize, edges: &[(usize, usize)], h: &[Vec<u8>]) -> u128 {
    let mut back = vec![Vec::new(); n];
    for &(u, v) in edges {
        back[u.max(v)].push(u.min(v));
    }
    fn go(v: usize, f: &mut Vec<usize>, back: &[Vec<usize>], h: &[Vec<u8>]) -> u128 {
        if v == back.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..h.len() {
            if back[v].iter().all(|&u| h[f[u]][c] == 1) {
                f[v] = c;
                total += go(v + 1, f, back, h);
            }
        }
        total
    }
    go(0, &mut vec![0; n], &back, h)
}

/// hom(F, H) for a forest `F` by rooting each component and multiplying
/// child sums.
pub fn forest_hom(n: usize, edges: &[(usize, usize)], h: &[Vec<u8>]) -> u128 {
    let q = h.len();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    fn table(v: usize, p: usize, adj: &[Vec<usize>], h: &[Vec<u8>]) -> Vec<u128> {
        let mut t = vec![1u128; h.len()];
        for &w in &adj[v] {
            if w == p {
                continue;
            }
            let child = table(w, v, adj, h);
            for (c, tc) in t.iter_mut().enumerate() {
                *tc *= (0..h.len())
                    .filter(|&d| h[c][d] == 1)
                    .map(|d| child[d])
                    .sum::<u128>();
            }
        }
        t
    }
    let mut seen = vec![false; n];
    let mut total = 1u128;
    for r in 0..n {
        if seen[r] {
            continue;
        }
        let mut stack = vec![r];
        seen[r] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        total *= table(r, usize::MAX, &adj, h).iter().take(q).sum::<u128>();
    }
    total
}

pub fn mat_mul(a: &[Vec<u128>], b: &[Vec<u128>]) -> Vec<Vec<u128>> {
    let q = a.len();
    (0..q)
        .map(|i| {
            (0..q)
                .map(|j| (0..q).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `A^m` for the 0/1 matrix `h`.
pub fn mat_pow(h: &[Vec<u8>], m: usize) -> Vec<Vec<u128>> {
    let q = h.len();
    let a: Vec<Vec<u128>> = h
        .iter()
        .map(|r| r.iter().map(|&x| x as u128).collect())
        .collect();
    let mut out: Vec<Vec<u128>> = (0..q)
        .map(|i| (0..q).map(|j| (i == j) as u128).collect())
        .collect();
    for _ in 0..m {
        out = mat_mul(&out, &a);
    }
    out
}

pub fn brute_hom_graph(g: &SimpleGraph, h: &HGraph) -> u128 {
    brute_hom(g.n(), &g.edges(), &h.matrix())
}

/// Decodes a graph6 line following the published format description.
pub fn oracle_decode_g6(s: &str) -> (usize, Vec<(usize, usize)>) {
    let b: Vec<u32> = s.bytes().map(|c| c as u32 - 63).collect();
    let (n, rest) = if b[0] < 63 {
        (b[0] as usize, &b[1..])
    } else {
        assert!(b[1] < 63, "8-byte form not used here");
        (((b[1] << 12) | (b[2] << 6) | b[3]) as usize, &b[4..])
    };
    let mut bits = rest
        .iter()
        .flat_map(|&x| (0..6).rev().map(move |k| (x >> k) & 1));
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bits.next().unwrap() == 1 {
                edges.push((i, j));
            }
        }
    }
    (n, edges)
}

pub fn oracle_encode_g6(n: usize, edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let set: std::collections::HashSet<(usize, usize)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(set.contains(&(i, j)) as u8);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(0);
    }
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |a, &b| a << 1 | b);
        out.push((v + 63) as char);
    }
    out
}

/// Tree from a Prüfer sequence on `n = seq.len() + 2` labels.
pub fn prufer_tree(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// AHU string of a tree rooted at its center(s); independent of the
/// library's encoding.
pub fn tree_key(n: usize, edges: &[(usize, usize)]) -> String {
    if n == 1 {
        return "()".into();
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    fn enc(v: usize, p: usize, adj: &[Vec<usize>]) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != p)
            .map(|&w| enc(w, v, adj))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer
        .iter()
        .map(|&c| enc(c, usize::MAX, &adj))
        .min()
        .unwrap()
}

/// Free trees on `n` vertices via Otter's formula.
pub fn otter_free_trees(nmax: usize) -> Vec<u128> {
    // rooted[n]: rooted unlabeled trees on n vertices.
    let mut rooted = vec![0u128; nmax + 1];
    if nmax >= 1 {
        rooted[1] = 1;
    }
    for n in 1..nmax {
        let mut s = 0u128;
        for k in 1..=n {
            let d_sum: u128 = (1..=k)
                .filter(|d| k % d == 0)
                .map(|d| d as u128 * rooted[d])
                .sum();
            s += d_sum * rooted[n - k + 1];
        }
        rooted[n + 1] = s / n as u128;
    }
    let mut free = vec![0u128; nmax + 1];
    for n in 1..=nmax {
        let mut pairs = 0u128;
        for i in 1..n {
            pairs += rooted[i] * rooted[n - i];
        }
        let half = if n % 2 == 0 { rooted[n / 2] } else { 0 };
        free[n] = rooted[n] - (pairs - half) / 2;
    }
    free
}

pub fn simple(g: &SimpleGraph) -> HGraph {
    HGraph::from_simple(g).unwrap()
}
