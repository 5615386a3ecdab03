mod common;

use std::collections::BTreeMap;

use fundgraph::construct::{bdh_check_forbidden, replay_sp, sp_recognize};
use fundgraph::enumerate::{connected_bipartite_up_to, random_sp_construction, simple_graphs, two_connected_simple};
use fundgraph::fundamental::BinaryMatroid;
use fundgraph::graph::LabeledGraph;
use fundgraph::pivot::pivot;
use fundgraph::poly::*;
use fundgraph::Multigraph;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn tutte_map(p: &Polynomial2V) -> BTreeMap<(usize, usize), BigInt> {
    p.terms().map(|(&(i, j), c)| ((i as usize, j as usize), c.clone())).collect()
}

fn coeffs(p: &Polynomial1V) -> Vec<BigInt> {
    if p.is_zero() {
        vec![BigInt::from(0)]
    } else {
        p.coeffs().to_vec()
    }
}

#[test]
fn interlace_recursion_matches_the_nullity_sum() {
    for level in connected_bipartite_up_to(8) {
        for g in &level {
            let q = interlace(g).unwrap();
            assert_eq!(coeffs(&q), common::interlace_by_subsets(&g.simple_adjacency().unwrap()), "{g:?}");
        }
    }
}

#[test]
fn tutte_recursion_matches_the_rank_generating_sum() {
    for n in 2..=5 {
        for h in simple_graphs(n).into_iter().filter(|h| h.is_connected()) {
            assert_eq!(tutte_map(&tutte_graph(&h).unwrap()), common::tutte_by_subsets(&h));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..80 {
        let steps = rng.random_range(0..=10);
        let h = replay_sp(&random_sp_construction(&mut rng, steps)).unwrap();
        assert_eq!(tutte_map(&tutte_graph(&h).unwrap()), common::tutte_by_subsets(&h));
        let cm = tutte_matroid(&BinaryMatroid::cycle_matroid(&h).unwrap()).unwrap();
        assert_eq!(tutte_map(&cm), common::tutte_by_subsets(&h));
    }
}

#[test]
fn k4_diagonal_fixture() {
    let k4 = Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let d = tutte_graph(&k4).unwrap().diagonal();
    assert_eq!(d, Polynomial1V::from_i64(&[0, 4, 10, 2]));
    assert_eq!(d.to_string(), "2x^3 + 10x^2 + 4x");
    assert_eq!(beta(&k4).unwrap(), BigInt::from(2));
}

#[test]
fn interlace_equals_the_diagonal_tutte_polynomial() {
    for level in connected_bipartite_up_to(7).into_iter().skip(2) {
        for g in &level {
            let r = verify_identity(g).unwrap();
            assert!(r.matroid_identity, "{g:?}");
            let bdh = bdh_check_forbidden(g).unwrap().free;
            assert_eq!(r.graph_identity, if bdh { Some(true) } else { None });
        }
    }
}

#[test]
fn gamma_is_two_exactly_for_bdh_graphs() {
    for level in connected_bipartite_up_to(8).into_iter().skip(2) {
        for g in &level {
            let bdh = bdh_check_forbidden(g).unwrap().free;
            assert_eq!(gamma(g).unwrap() == BigInt::from(2), bdh, "{g:?}");
        }
    }
}

#[test]
fn beta_is_one_exactly_for_sp_graphs() {
    for h in two_connected_simple(6) {
        let sp = sp_recognize(&h).unwrap().is_some();
        assert_eq!(beta(&h).unwrap() == BigInt::from(1), sp, "{h:?}");
    }
}

#[test]
fn nullity_sum_handles_non_bipartite_graphs() {
    let triangle = LabeledGraph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
    let q = interlace_graph(&triangle).unwrap();
    assert_eq!(coeffs(&q), common::interlace_by_subsets(triangle.masks()));
}

#[test]
fn capacity_guards() {
    let big = fundgraph::graph::named::path(MAX_INTERLACE_VERTICES + 1);
    assert!(matches!(interlace(&big), Err(fundgraph::Error::Capacity(_))));
    let pairs: Vec<(usize, usize)> = (0..=MAX_TUTTE_EDGES).map(|_| (0, 1)).collect();
    let fat = Multigraph::from_pairs(2, &pairs).unwrap();
    assert!(matches!(tutte_graph(&fat), Err(fundgraph::Error::Capacity(_))));
}

proptest! {
    #[test]
    fn interlace_is_a_pivot_invariant(g in common::bipartite_strategy(5), pick in any::<usize>()) {
        let edges = g.edge_labels();
        prop_assume!(!edges.is_empty());
        let (u, v) = &edges[pick % edges.len()];
        prop_assert_eq!(interlace(&g).unwrap(), interlace(&pivot(&g, u, v).unwrap()).unwrap());
    }

    #[test]
    fn interlace_of_random_bipartite_graphs_matches_the_oracle(g in common::bipartite_strategy(5)) {
        let q = interlace(&g).unwrap();
        prop_assert_eq!(coeffs(&q), common::interlace_by_subsets(&g.simple_adjacency().unwrap()));
        prop_assert_eq!(q.eval(&BigInt::from(2)), BigInt::from(1u64 << g.vertex_count()));
    }
}
