use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::graph::SimpleGraph;

/// Largest target graph supported; rows are stored as `u64` bitmasks.
pub const MAX_H_VERTICES: usize = 64;

/// Target graph: symmetric 0/1 adjacency over `0..q`, loops on the diagonal.
///
/// Degrees follow the loop convention: a loop contributes exactly one, so
/// `degree(v)` is the number of distinct `w` (possibly `v` itself) with
/// `v ~ w`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HGraph {
    rows: Vec<u64>,
}

impl HGraph {
    /// Builds from neighborhood bitmasks, validating range and symmetry.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let q = rows.len();
        if q > MAX_H_VERTICES {
            return Err(Error::LimitExceeded {
                what: "target vertices",
                got: q,
                limit: MAX_H_VERTICES,
            });
        }
        let mask = full_mask(q);
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 {
                return Err(Error::InvalidGraph(format!(
                    "row {i} has bits beyond q = {q}"
                )));
            }
            for (j, &c) in rows.iter().enumerate() {
                if (r >> j) & 1 != (c >> i) & 1 {
                    return Err(Error::InvalidGraph(format!("asymmetric entry ({i}, {j})")));
                }
            }
        }
        Ok(HGraph { rows })
    }

    /// Builds from a 0/1 matrix.
    pub fn from_matrix(matrix: &[Vec<u8>]) -> Result<Self> {
        let q = matrix.len();
        let mut rows = Vec::with_capacity(q);
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != q {
                return Err(Error::InvalidGraph(format!(
                    "row {i} has length {}",
                    row.len()
                )));
            }
            let mut r = 0u64;
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => r |= 1 << j,
                    _ => return Err(Error::InvalidGraph(format!("entry ({i}, {j}) = {x}"))),
                }
            }
            rows.push(r);
        }
        Self::from_rows(rows)
    }

    /// Loopless copy of a simple graph.
    pub fn from_simple(g: &SimpleGraph) -> Result<Self> {
        if g.n() > MAX_H_VERTICES {
            return Err(Error::LimitExceeded {
                what: "target vertices",
                got: g.n(),
                limit: MAX_H_VERTICES,
            });
        }
        Ok(HGraph {
            rows: g.adjacency_masks(),
        })
    }

    /// Bitmask with the low `q` bits set.
    pub fn full_mask_for(q: usize) -> u64 {
        full_mask(q)
    }

    /// The graph with no vertices.
    pub fn null() -> Self {
        HGraph { rows: Vec::new() }
    }

    pub fn q(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    pub fn has_loop(&self, i: usize) -> bool {
        self.adjacent(i, i)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let r = self.rows[i];
        (0..self.q()).filter(move |&j| (r >> j) & 1 == 1)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.q()).map(|i| self.degree(i)).collect()
    }

    /// Maximum degree; zero for the null graph.
    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_loopless(&self) -> bool {
        (0..self.q()).all(|i| !self.has_loop(i))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let q = self.q();
        let mut seen = vec![false; q];
        let mut out = Vec::new();
        for s in 0..q {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> HGraph {
        let rows = vertices
            .iter()
            .map(|&v| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adjacent(v, w))
                    .fold(0u64, |m, (j, _)| m | (1 << j))
            })
            .collect();
        HGraph { rows }
    }

    /// Loopless and 2-colorable.
    pub fn is_loopless_bipartite(&self) -> bool {
        if !self.is_loopless() {
            return false;
        }
        let q = self.q();
        let mut side = vec![u8::MAX; q];
        for s in 0..q {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every pair adjacent, every vertex looped. True for the null graph.
    pub fn is_complete_looped(&self) -> bool {
        let mask = full_mask(self.q());
        self.rows.iter().all(|&r| r == mask)
    }

    /// Copy with a loop added on every vertex.
    pub fn looped(&self) -> HGraph {
        HGraph {
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(i, &r)| r | (1 << i))
                .collect(),
        }
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    ///
    /// # Panics
    /// If the result would exceed [`MAX_H_VERTICES`].
    pub fn disjoint_union(&self, other: &HGraph) -> HGraph {
        let shift = self.q();
        assert!(
            shift + other.q() <= MAX_H_VERTICES,
            "target graph too large"
        );
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << shift));
        HGraph { rows }
    }

    /// Join: disjoint union plus every cross pair adjacent.
    ///
    /// # Panics
    /// If the result would exceed [`MAX_H_VERTICES`].
    pub fn join(&self, other: &HGraph) -> HGraph {
        let (a, b) = (self.q(), other.q());
        assert!(a + b <= MAX_H_VERTICES, "target graph too large");
        let low = full_mask(a);
        let high = full_mask(b) << a;
        let mut rows = Vec::with_capacity(a + b);
        rows.extend(self.rows.iter().map(|&r| r | high));
        rows.extend(other.rows.iter().map(|&r| (r << a) | low));
        HGraph { rows }
    }

    /// Adjacency matrix as 0/1 rows.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        (0..self.q())
            .map(|i| (0..self.q()).map(|j| self.adjacent(i, j) as u8).collect())
            .collect()
    }

    /// Serializes in the H-matrix text format accepted by [`parse_hgraph`].
    pub fn to_matrix_text(&self) -> String {
        let mut s = format!("{}\n", self.q());
        for row in self.matrix() {
            for x in row {
                s.push(if x == 1 { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for HGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .matrix()
            .into_iter()
            .map(|r| r.into_iter().map(|x| char::from(b'0' + x)).collect())
            .collect();
        write!(f, "HGraph[{}]", rows.join(" "))
    }
}

pub(crate) fn full_mask(q: usize) -> u64 {
    if q >= 64 {
        u64::MAX
    } else {
        (1u64 << q) - 1
    }
}

/// Parses the H-matrix format: a line holding `q`, then `q` lines of `q`
/// characters from `{0,1}`. Diagonal ones are loops. Matrix rows are
/// numbered from zero in errors.
pub fn parse_hgraph(text: &str) -> std::result::Result<HGraph, ParseError> {
    let err = |row: usize, msg: String| ParseError::HMatrix { row, msg };
    let header_err = |msg: String| ParseError::HHeader { msg };
    let mut lines = text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l));
    let header = lines
        .next()
        .ok_or_else(|| header_err("missing vertex count".into()))?
        .trim();
    let q: usize = header
        .parse()
        .map_err(|_| header_err(format!("vertex count {header:?} is not an integer")))?;
    if q > MAX_H_VERTICES {
        return Err(header_err(format!(
            "q = {q} exceeds limit {MAX_H_VERTICES}"
        )));
    }
    let mut rows = Vec::with_capacity(q);
    for i in 0..q {
        let line = lines
            .next()
            .ok_or_else(|| err(i, format!("expected {q} rows, found {i}")))?;
        if line.len() != q {
            return Err(err(
                i,
                format!("expected {q} entries, found {}", line.len()),
            ));
        }
        let mut r = 0u64;
        for (j, c) in line.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => r |= 1 << j,
                other => {
                    return Err(err(
                        i,
                        format!("column {j}: character {:?} is not 0 or 1", other as char),
                    ))
                }
            }
        }
        rows.push(r);
    }
    if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
        return Err(err(q, format!("unexpected trailing line {extra:?}")));
    }
    for i in 0..q {
        for j in 0..i {
            if (rows[i] >> j) & 1 != (rows[j] >> i) & 1 {
                return Err(err(
                    i,
                    format!("column {j} disagrees with row {j} column {i}"),
                ));
            }
        }
    }
    Ok(HGraph { rows })
}
