use crate::graph::{
    complete, complete_bipartite, cycle, h_circ_ell, looped_complete, parse_hgraph, path, petersen,
    widom_rowlinson, HGraph,
};

#[derive(Clone, Debug)]
pub struct NamedTarget {
    pub name: String,
    pub h: HGraph,
}

fn named(name: &str, h: HGraph) -> NamedTarget {
    NamedTarget {
        name: name.to_string(),
        h,
    }
}

fn loopless(g: &crate::graph::SimpleGraph) -> HGraph {
    HGraph::from_simple(g).expect("pool graphs are small")
}

/// The fixed target pool: regular and non-regular, bipartite and not,
/// looped and loopless, plus a few `H°(ℓ)` joins.
pub fn standard_pool() -> Vec<NamedTarget> {
    let h_ind = parse_hgraph("2\n11\n10").expect("literal");
    let mut pool = vec![
        named("K1", loopless(&complete(1))),
        named("K2", loopless(&complete(2))),
        named("K3", loopless(&complete(3))),
        named("K4", loopless(&complete(4))),
        named("P3", loopless(&path(3))),
        named("Hind", h_ind),
        named("WR2", widom_rowlinson(2)),
        named("WR3", widom_rowlinson(3)),
        named("K2o", looped_complete(2)),
        named("K3o", looped_complete(3)),
        named("K22", loopless(&complete_bipartite(2, 2))),
        named("K33", loopless(&complete_bipartite(3, 3))),
        named("Petersen", loopless(&petersen())),
        named("C5", loopless(&cycle(5))),
    ];
    for (name, base, ell) in [
        ("K2o(1)", loopless(&complete(2)), 1),
        ("K3o(1)", loopless(&complete(3)), 1),
        ("C5o(1)", loopless(&cycle(5)), 1),
        ("K2o(2)", loopless(&complete(2)), 2),
    ] {
        pool.push(named(name, h_circ_ell(&base, ell).expect("regular base")));
    }
    pool
}

/// Regular bases used with `H°(ℓ)`: `K_1, K_2, K_3, C_5, K_2°`.
pub fn regular_bases() -> Vec<NamedTarget> {
    vec![
        named("K1", loopless(&complete(1))),
        named("K2", loopless(&complete(2))),
        named("K3", loopless(&complete(3))),
        named("C5", loopless(&cycle(5))),
        named("K2o", looped_complete(2)),
    ]
}
