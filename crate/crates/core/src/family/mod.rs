//! Isomorph-free generation of trees and small graph families.
//!
//! Every generator extends the previous level by one vertex (a new leaf for
//! trees, a new vertex with an arbitrary neighborhood for general graphs)
//! and deduplicates by canonical certificate. Output graphs are the
//! canonically relabelled representatives, sorted by certificate, so runs
//! are reproducible regardless of scheduling.

mod ingest;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, GraphCertificate, SimpleGraph};
use crate::structure::{is_2_connected, is_2_edge_connected, is_minimally_2_connected};

pub use ingest::{ingest_graph6_stream, IngestOptions, IngestOutcome};

pub const MAX_TREE_N: usize = 16;
pub const MAX_GRAPH_N: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Trees,
    TwoConnected,
    TwoEdgeConnected,
    MinimallyTwoConnected,
    AllGraphs,
}

impl FamilyKind {
    /// Whether `g` belongs to the family.
    pub fn contains(self, g: &SimpleGraph) -> bool {
        match self {
            FamilyKind::Trees => g.is_tree(),
            FamilyKind::TwoConnected => is_2_connected(g),
            FamilyKind::TwoEdgeConnected => g.n() >= 3 && is_2_edge_connected(g),
            FamilyKind::MinimallyTwoConnected => {
                is_2_connected(g) && is_minimally_2_connected(g).unwrap_or(false)
            }
            FamilyKind::AllGraphs => true,
        }
    }

    pub fn limit(self) -> usize {
        match self {
            FamilyKind::Trees => MAX_TREE_N,
            _ => MAX_GRAPH_N,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Trees => "trees",
            FamilyKind::TwoConnected => "2conn",
            FamilyKind::TwoEdgeConnected => "2econn",
            FamilyKind::MinimallyTwoConnected => "min2conn",
            FamilyKind::AllGraphs => "all",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "trees" | "tree" => FamilyKind::Trees,
            "2conn" | "two_connected" => FamilyKind::TwoConnected,
            "2econn" | "two_edge_connected" => FamilyKind::TwoEdgeConnected,
            "min2conn" | "minimally_two_connected" => FamilyKind::MinimallyTwoConnected,
            "all" | "all_graphs" => FamilyKind::AllGraphs,
            other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self> {
        if n > kind.limit() {
            return Err(Error::LimitExceeded {
                what: "family vertex count",
                got: n,
                limit: kind.limit(),
            });
        }
        if kind == FamilyKind::Trees && n == 0 {
            return Err(Error::InvalidParameter("trees need n >= 1".into()));
        }
        Ok(FamilySpec { kind, n })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.kind, self.n)
    }
}

fn dedup_sorted(
    mut found: Vec<(GraphCertificate, SimpleGraph)>,
) -> Vec<(GraphCertificate, SimpleGraph)> {
    found.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    found.dedup_by(|a, b| a.0 == b.0);
    found
}

/// All free trees on `n` vertices, one per isomorphism class.
pub fn gen_trees(n: usize) -> Result<Vec<SimpleGraph>> {
    FamilySpec::new(FamilyKind::Trees, n)?;
    Ok(trees_with_certificates(n)
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

fn trees_with_certificates(n: usize) -> Vec<(GraphCertificate, SimpleGraph)> {
    let mut level = vec![canonical_form(&SimpleGraph::empty(1)).expect("n = 1")];
    for k in 1..n {
        let grown: Vec<_> = level
            .par_iter()
            .flat_map_iter(|(_, t)| {
                let edges = t.edges();
                (0..k).map(move |v| {
                    let mut e = edges.clone();
                    e.push((v, k));
                    canonical_form(&SimpleGraph::from_edges_unchecked(k + 1, &e))
                        .expect("tree within canonical limit")
                })
            })
            .collect();
        level = dedup_sorted(grown);
    }
    level
}

/// Every graph on `n` vertices up to isomorphism.
fn all_graphs_with_certificates(n: usize) -> Vec<(GraphCertificate, SimpleGraph)> {
    let mut level = vec![canonical_form(&SimpleGraph::empty(0)).expect("n = 0")];
    for k in 0..n {
        let grown: Vec<_> = level
            .par_iter()
            .flat_map_iter(|(_, g)| {
                let edges = g.edges();
                (0u64..1 << k).map(move |mask| {
                    let mut e = edges.clone();
                    e.extend((0..k).filter(|&v| (mask >> v) & 1 == 1).map(|v| (v, k)));
                    canonical_form(&SimpleGraph::from_edges_unchecked(k + 1, &e))
                        .expect("graph within canonical limit")
                })
            })
            .collect();
        level = dedup_sorted(grown);
    }
    level
}

/// One representative per isomorphism class of the requested family.
pub fn gen_graphs(spec: FamilySpec) -> Result<Vec<SimpleGraph>> {
    let spec = FamilySpec::new(spec.kind, spec.n)?;
    if spec.kind == FamilyKind::Trees {
        return gen_trees(spec.n);
    }
    let all = all_graphs_with_certificates(spec.n);
    Ok(all
        .into_par_iter()
        .filter(|(_, g)| spec.kind.contains(g))
        .map(|(_, g)| g)
        .collect())
}

/// Minimally 2-connected graphs on `n` vertices.
pub fn gen_min_2conn(n: usize) -> Result<Vec<SimpleGraph>> {
    gen_graphs(FamilySpec::new(FamilyKind::MinimallyTwoConnected, n)?)
}
