mod common;

use common::*;
use homlab::graph::{
    complete, complete_bipartite, cycle, h_circ_ell, looped_complete, parse_hgraph, path, star,
};
use homlab::hom::{
    closed_form_cycle_kq, closed_form_k2, closed_form_star, count_hom, count_hom_backtrack,
    count_hom_cycle, count_hom_forest, count_hom_path, count_hom_restricted, count_path_endpoints,
    Assignment,
};
use homlab::{ExactCount, HGraph, SimpleGraph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.4), pair_count(n)).prop_map(
            move |bits| {
                let mask = bits
                    .iter()
                    .enumerate()
                    .fold(0u64, |m, (i, &b)| m | (b as u64) << i);
                SimpleGraph::from_edges(n, &labeled_edges(n, mask)).unwrap()
            },
        )
    })
}

fn arb_hgraph(max_q: usize) -> impl Strategy<Value = HGraph> {
    (1..=max_q).prop_flat_map(|q| {
        proptest::collection::vec(any::<bool>(), q * (q + 1) / 2).prop_map(move |bits| {
            let mut m = vec![vec![0u8; q]; q];
            let mut k = 0;
            for i in 0..q {
                for j in i..q {
                    m[i][j] = bits[k] as u8;
                    m[j][i] = bits[k] as u8;
                    k += 1;
                }
            }
            HGraph::from_matrix(&m).unwrap()
        })
    })
}

fn big(x: u128) -> ExactCount {
    ExactCount::from(x)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn engines_match_brute_force(g in arb_graph(6), h in arb_hgraph(4)) {
        let want = big(brute_hom_graph(&g, &h));
        prop_assert_eq!(&count_hom(&g, &h), &want);
        prop_assert_eq!(&count_hom_backtrack(&g, &h), &want);
        if let Some(f) = count_hom_forest(&g, &h) {
            prop_assert_eq!(f, want);
        }
    }

    #[test]
    fn deleting_an_edge_never_decreases(g in arb_graph(7), h in arb_hgraph(4)) {
        let base = count_hom(&g, &h);
        for (u, v) in g.edges() {
            prop_assert!(count_hom(&g.without_edge(u, v), &h) >= base);
        }
    }

    #[test]
    fn disjoint_union_of_targets_adds(g in arb_graph(7), a in arb_hgraph(3), b in arb_hgraph(3)) {
        prop_assume!(g.is_connected());
        let sum = count_hom(&g, &a) + count_hom(&g, &b);
        prop_assert_eq!(count_hom(&g, &a.disjoint_union(&b)), sum);
    }

    #[test]
    fn complete_looped_gives_power(g in arb_graph(8), d in 1usize..5) {
        prop_assert_eq!(count_hom(&g, &looped_complete(d)), ExactCount::pow(d as u64, g.n() as u32));
    }

    #[test]
    fn complete_bipartite_target(g in arb_graph(8), d in 1usize..4) {
        prop_assume!(g.is_connected());
        let h = simple(&complete_bipartite(d, d));
        let want = if g.is_bipartite() {
            ExactCount::from(2u64) * ExactCount::pow(d as u64, g.n() as u32)
        } else {
            ExactCount::zero()
        };
        prop_assert_eq!(count_hom(&g, &h), want);
    }

    #[test]
    fn pinning_decomposes(g in arb_graph(6), h in arb_hgraph(4), x in 0usize..6) {
        prop_assume!(x < g.n());
        let total: ExactCount = (0..h.q())
            .map(|i| count_hom_restricted(&g, &h, &Assignment::new().pin(x, i)))
            .sum();
        prop_assert_eq!(total, count_hom(&g, &h));
    }

    #[test]
    fn walks_match_brute_force(h in arb_hgraph(4), k in 1usize..7) {
        prop_assert_eq!(count_hom_path(k, &h), big(brute_hom_graph(&path(k), &h)));
        if k >= 3 {
            prop_assert_eq!(count_hom_cycle(k, &h), big(brute_hom_graph(&cycle(k), &h)));
        }
        let endpoints: ExactCount = (0..h.q())
            .flat_map(|i| (0..h.q()).map(move |j| (i, j)))
            .map(|(i, j)| count_path_endpoints(k, &h, i, j))
            .sum();
        prop_assert_eq!(endpoints, count_hom_path(k, &h));
    }

    #[test]
    fn closed_forms_match_brute_force(h in arb_hgraph(4), n in 3usize..7) {
        prop_assert_eq!(closed_form_star(n, &h), big(brute_hom_graph(&star(n), &h)));
        prop_assert_eq!(
            closed_form_k2(n, &h),
            big(brute_hom_graph(&complete_bipartite(2, n - 2), &h))
        );
    }
}

#[test]
fn cycle_formula_matches_brute_force() {
    for q in 2..=5 {
        let h = simple(&complete(q));
        for n in 3..=7 {
            assert_eq!(
                closed_form_cycle_kq(n, q),
                big(brute_hom_graph(&cycle(n), &h))
            );
        }
    }
}

#[test]
fn documented_examples() {
    let k3 = simple(&complete(3));
    let h_ind = parse_hgraph("2\n11\n10").unwrap();
    assert_eq!(count_hom(&cycle(5), &k3), 30u64);
    assert_eq!(count_hom(&star(5), &looped_complete(2)), 32u64);
    assert_eq!(count_hom(&path(3), &h_ind), 5u64);
    assert_eq!(
        count_hom_restricted(&path(2), &k3, &Assignment::new().pin(0, 0)),
        2u64
    );
    assert_eq!(
        count_hom_restricted(&path(3), &h_ind, &Assignment::new().pin(1, 1)),
        1u64
    );
    let total = Assignment::new().pin(0, 0).pin(1, 1).pin(2, 2);
    assert_eq!(count_hom_restricted(&cycle(3), &k3, &total), 1u64);
    assert_eq!(count_hom_path(2, &k3), 6u64);
    assert_eq!(count_hom_path(7, &simple(&path(3))), 24u64);
    assert_eq!(count_hom_cycle(4, &k3), 18u64);
    assert_eq!(count_hom_cycle(3, &h_ind), 4u64);
    assert_eq!(count_path_endpoints(2, &k3, 0, 1), 1u64);
    assert_eq!(count_path_endpoints(4, &k3, 0, 0), 2u64);
    assert_eq!(count_path_endpoints(3, &k3, 0, 1), 1u64);
    assert_eq!(closed_form_star(5, &k3), 48u64);
    assert_eq!(closed_form_star(2, &k3), 6u64);
    assert_eq!(closed_form_k2(5, &k3), 30u64);
    assert_eq!(closed_form_k2(4, &looped_complete(2)), 16u64);
    assert_eq!(closed_form_k2(6, &h_ind), 19u64);
    assert_eq!(closed_form_cycle_kq(3, 2), 0u64);
    assert_eq!(count_hom(&SimpleGraph::empty(0), &k3), 1u64);
}

/// Random forest on `n` vertices: each vertex after the first attaches to
/// an earlier one or starts a new component.
fn random_forest(rng: &mut impl Rng, n: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(0.85) {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    SimpleGraph::from_edges(n, &edges).unwrap()
}

/// `hom(F, H°(ℓ)) = ℓ·(q - Δ)·hom(F - x - y) + (Δ + ℓ)·hom(F - x)` for a
/// leaf `x` with neighbour `y`. `factor` scales the first term so the
/// variant without the `ℓ` can be probed too.
fn leaf_recurrence_holds(f: &SimpleGraph, base: &HGraph, ell: usize, factor: u64) -> bool {
    let h = h_circ_ell(base, ell).unwrap();
    let q = base.q() as u64;
    let d = base.max_degree() as u64;
    f.leaves().into_iter().all(|x| {
        let y = f.neighbors(x)[0];
        let lhs = count_hom(f, &h);
        let rhs = ExactCount::from(factor * (q - d)) * count_hom(&f.without_vertices(&[x, y]), &h)
            + ExactCount::from(d + ell as u64) * count_hom(&f.without_vertices(&[x]), &h);
        lhs == rhs
    })
}

#[test]
fn leaf_recurrence_on_random_forests() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let bases = [
        simple(&complete(1)),
        simple(&complete(2)),
        simple(&complete(3)),
        simple(&cycle(5)),
        looped_complete(2),
    ];
    for _ in 0..60 {
        let n = rng.gen_range(2..=12);
        let f = random_forest(&mut rng, n);
        for base in &bases {
            for ell in 1..=3 {
                assert!(
                    leaf_recurrence_holds(&f, base, ell, ell as u64),
                    "{:?}",
                    f.edges()
                );
            }
        }
    }
}

#[test]
fn leaf_recurrence_without_ell_factor_only_holds_for_one_dominating_vertex() {
    let k1 = simple(&complete(1));
    assert!(leaf_recurrence_holds(&path(2), &k1, 1, 1));
    // hom(P_2, K_1 join K_2°) = 8, but 1·1 + 2·3 = 7.
    assert!(!leaf_recurrence_holds(&path(2), &k1, 2, 1));
    assert!(leaf_recurrence_holds(&path(2), &k1, 2, 2));
    // q = Δ makes the first term vanish, so any factor works.
    assert!(leaf_recurrence_holds(&path(5), &looped_complete(2), 3, 1));
}

#[test]
fn hoffman_london_on_pool() {
    for t in homlab::extremal::standard_pool() {
        for n in 1..=12 {
            assert!(
                count_hom_path(n, &t.h) <= closed_form_star(n, &t.h),
                "{} n={n}",
                t.name
            );
        }
    }
}

#[test]
fn large_counts_stay_exact() {
    // 40-vertex path into K_3°: 3^40 overflows u64 but not the tally.
    let want = ExactCount::pow(3, 40);
    assert_eq!(count_hom(&path(40), &looped_complete(3)), want);
    let g = cycle(30).disjoint_union(&complete(4));
    let h = looped_complete(5);
    assert_eq!(count_hom(&g, &h), ExactCount::pow(5, 34));
    assert_eq!(
        count_hom_backtrack(&complete(4), &looped_complete(40)),
        ExactCount::pow(40, 4)
    );
}
