//! Named source and target graphs.

use crate::error::{Error, Result};
use crate::graph::{HGraph, SimpleGraph, MAX_H_VERTICES};

/// `P_n`: vertices `0..n` in a line.
pub fn path(n: usize) -> SimpleGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    SimpleGraph::from_edges_unchecked(n, &edges)
}

/// `C_n`.
///
/// # Panics
/// If `n < 3`.
pub fn cycle(n: usize) -> SimpleGraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    SimpleGraph::from_edges_unchecked(n, &edges)
}

/// `K_{1,n-1}` on `n` vertices, centered at vertex 0.
pub fn star(n: usize) -> SimpleGraph {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    SimpleGraph::from_edges_unchecked(n, &edges)
}

pub fn complete(n: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            edges.push((i, j));
        }
    }
    SimpleGraph::from_edges_unchecked(n, &edges)
}

/// `K_{a,b}`: parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in a..a + b {
            edges.push((i, j));
        }
    }
    SimpleGraph::from_edges_unchecked(a + b, &edges)
}

pub fn petersen() -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    SimpleGraph::from_edges_unchecked(10, &edges)
}

/// `K_n°`: complete graph with a loop on every vertex.
pub fn looped_complete(n: usize) -> HGraph {
    HGraph::from_simple(&complete(n))
        .expect("looped_complete size")
        .looped()
}

/// `H_WR(k)`: looped star with center 0 and `k` looped leaves.
pub fn widom_rowlinson(k: usize) -> HGraph {
    HGraph::from_simple(&star(k + 1))
        .expect("widom_rowlinson size")
        .looped()
}

/// `H°(ℓ)`: join of a regular `H` with `K_ℓ°`; the looped dominating
/// vertices are `q..q+ℓ`.
pub fn h_circ_ell(base: &HGraph, ell: usize) -> Result<HGraph> {
    if !base.is_regular() {
        return Err(Error::NotApplicable(format!(
            "base graph is not regular (degrees {:?})",
            base.degrees()
        )));
    }
    if ell == 0 {
        return Err(Error::InvalidParameter("ell must be at least 1".into()));
    }
    if base.q() + ell > MAX_H_VERTICES {
        return Err(Error::LimitExceeded {
            what: "target vertices",
            got: base.q() + ell,
            limit: MAX_H_VERTICES,
        });
    }
    Ok(base.join(&looped_complete(ell)))
}

/// Parameterised named graphs accepted by [`make_family`].
#[derive(Clone, Debug)]
pub enum NamedFamily {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    LoopedComplete(usize),
    WidomRowlinson(usize),
    HCircEll(HGraph, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constructed {
    Source(SimpleGraph),
    Target(HGraph),
}

/// Builds a named graph after validating its parameters.
pub fn make_family(kind: NamedFamily) -> Result<Constructed> {
    let bad = |msg: &str| Err(Error::InvalidParameter(msg.to_string()));
    match kind {
        NamedFamily::Path(0) => bad("path needs n >= 1"),
        NamedFamily::Path(n) => Ok(Constructed::Source(path(n))),
        NamedFamily::Cycle(n) if n < 3 => bad("cycle needs n >= 3"),
        NamedFamily::Cycle(n) => Ok(Constructed::Source(cycle(n))),
        NamedFamily::Star(0) => bad("star needs n >= 1"),
        NamedFamily::Star(n) => Ok(Constructed::Source(star(n))),
        NamedFamily::Complete(0) => bad("complete graph needs n >= 1"),
        NamedFamily::Complete(n) => Ok(Constructed::Source(complete(n))),
        NamedFamily::CompleteBipartite(a, b) if a == 0 || b == 0 => {
            bad("complete bipartite graph needs nonempty parts")
        }
        NamedFamily::CompleteBipartite(a, b) => Ok(Constructed::Source(complete_bipartite(a, b))),
        NamedFamily::LoopedComplete(n) if n == 0 || n > MAX_H_VERTICES => {
            bad("looped complete graph needs 1 <= n <= 64")
        }
        NamedFamily::LoopedComplete(n) => Ok(Constructed::Target(looped_complete(n))),
        NamedFamily::WidomRowlinson(k) if k == 0 || k >= MAX_H_VERTICES => {
            bad("Widom-Rowlinson target needs 1 <= k <= 63")
        }
        NamedFamily::WidomRowlinson(k) => Ok(Constructed::Target(widom_rowlinson(k))),
        NamedFamily::HCircEll(base, ell) => h_circ_ell(&base, ell).map(Constructed::Target),
    }
}
