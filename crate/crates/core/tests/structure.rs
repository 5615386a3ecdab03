use fundgraph::construct::{bdh_recognize, sp_recognize};
use fundgraph::enumerate::{connected_bipartite_up_to, random_defining_sequence, two_connected_simple};
use fundgraph::construct::replay_bdh;
use fundgraph::fundamental::{bdh_to_sp, spanning_trees, SpanningTree};
use fundgraph::graph::{find_induced, Pattern};
use fundgraph::pivot::{orbit, pivot, DEFAULT_ORBIT_CAP};
use fundgraph::structure::*;
use fundgraph::{BipartiteGraph, Multigraph, Side};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn is_bdh(g: &BipartiteGraph) -> bool {
    bdh_recognize(g).unwrap().is_some()
}

fn without_edge(g: &BipartiteGraph, u: &str, v: &str) -> BipartiteGraph {
    let (x, y) = (g.index_of(u).unwrap(), g.index_of(v).unwrap());
    let (x, y) = if x < g.class_a().len() { (x, y) } else { (y, x) };
    let mut m = g.adjacency().clone();
    m.set(x, y - g.class_a().len(), false);
    BipartiteGraph::from_matrix(g.class_a().to_vec(), g.class_b().to_vec(), m).unwrap()
}

#[test]
fn every_small_bdh_graph_has_supporting_arborescences_for_both_classes() {
    let mut checked = 0;
    for level in connected_bipartite_up_to(9) {
        for g in level.iter().filter(|g| is_bdh(g)) {
            for cls in [Side::A, Side::B] {
                if g.class(cls).is_empty() {
                    continue;
                }
                let cert = supporting_arborescence(g, cls).unwrap();
                verify_certificate(&cert).unwrap();
                checked += 1;
            }
        }
    }
    assert!(checked > 500);
}

#[test]
fn sp_iff_every_spanning_tree_is_a_dfs_tree_of_a_two_isomorphic_copy() {
    for h in two_connected_simple(7) {
        let sp = sp_recognize(&h).unwrap().is_some();
        let trees = spanning_trees(&h, 20_000).unwrap();
        let all = trees.iter().all(|t| dfs_tree_check(&h, t).unwrap().is_some());
        assert_eq!(sp, all, "{h:?}");
    }
}

#[test]
fn dfs_orientation_makes_fundamental_circuits_directed() {
    let diamond = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
    for t in spanning_trees(&diamond, 100).unwrap() {
        let o = dfs_tree_check(&diamond, &t).unwrap().unwrap();
        for f in o.tree.cotree(&o.host).unwrap() {
            let c = fundgraph::fundamental::fundamental_circuit(&o.host, &o.tree, &f).unwrap();
            let mut out = std::collections::HashMap::new();
            for id in &c.circuit_edges {
                let e = o.host.edge(o.host.edge_index(id).unwrap());
                assert!(out.insert(e.u, e.v).is_none());
            }
            assert_eq!(out.len(), c.circuit_edges.len());
        }
    }
    let k4 = Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let trees = spanning_trees(&k4, 100).unwrap();
    assert!(trees.iter().any(|t| dfs_tree_check(&k4, t).unwrap().is_none()));
}

#[test]
fn bisimplicial_edges_become_cut_edges_after_pivoting() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let n = 2 + (rand::Rng::random_range(&mut rng, 0..9));
        let g = replay_bdh(&random_defining_sequence(&mut rng, n)).unwrap();
        for (u, v) in g.edge_labels() {
            let ge = pivot(&g, &u, &v).unwrap();
            let cut_in_pivot = !without_edge(&ge, &u, &v).is_connected();
            assert_eq!(is_bisimplicial(&g, &u, &v).unwrap().bisimplicial, cut_in_pivot);
            let cut_here = !without_edge(&g, &u, &v).is_connected();
            assert_eq!(cut_here, is_bisimplicial(&ge, &u, &v).unwrap().bisimplicial);
        }
    }
}

#[test]
fn chordal_bipartite_arrow_free_non_trees_have_proper_bisimplicial_edges() {
    for level in connected_bipartite_up_to(8) {
        for g in &level {
            if g.edge_count() < g.vertex_count()
                || find_induced(g, Pattern::Hole).unwrap().is_some()
                || find_induced(g, Pattern::Arrow).unwrap().is_some()
            {
                continue;
            }
            let found = g.edge_labels().iter().any(|(u, v)| is_bisimplicial(g, u, v).unwrap().proper);
            assert!(found, "{g:?}");
        }
    }
}

#[test]
fn arrow_t2_free_bdh_class_is_closed_under_pivoting() {
    for level in connected_bipartite_up_to(9) {
        for g in level.iter().filter(|g| is_bdh(g) && forbidden_quadruple_check(g).unwrap().free) {
            for m in orbit(g, DEFAULT_ORBIT_CAP).unwrap().members() {
                assert!(is_bdh(m));
                assert!(forbidden_quadruple_check(m).unwrap().free);
            }
        }
    }
}

#[test]
fn three_characterizations_of_pivot_chain_graphs_agree() {
    for level in connected_bipartite_up_to(8) {
        for g in &level {
            let free = forbidden_quadruple_check(g).unwrap().free;
            let chain = chain_graph_orbit_search(g, DEFAULT_ORBIT_CAP).unwrap();
            assert_eq!(free, chain.is_some(), "{g:?}");
            if let Some(c) = &chain {
                assert!(is_chain_graph(&c.chain).unwrap());
            }
            if is_bdh(g) && g.vertex_count() >= 2 {
                let (h, _) = bdh_to_sp(g).unwrap();
                assert_eq!(free, selfdual_outerplanar_check(&h).unwrap().self_dual, "{g:?}");
            }
        }
    }
}

#[test]
fn balanced_orbits_consist_of_bdh_graphs() {
    for level in connected_bipartite_up_to(8) {
        for g in &level {
            let orb = orbit(g, DEFAULT_ORBIT_CAP).unwrap();
            if orb.members().all(|m| balancedness_check(m).unwrap()) {
                assert!(is_bdh(g), "{g:?}");
            }
        }
    }
}

#[test]
fn fan_fundamental_graph_reaches_a_chain_graph() {
    // apex 0 over the path 1-2-3-4, tree = Hamiltonian path 0-1-2-3-4
    let fan = Multigraph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (0, 3), (0, 4)]).unwrap();
    let t = SpanningTree::new(&fan, &["e1", "e2", "e3", "e4"]).unwrap();
    let g = fundgraph::fundamental::fundamental_graph(&fan, &t).unwrap();
    let found = chain_graph_orbit_search(&g, DEFAULT_ORBIT_CAP).unwrap().unwrap();
    let mut h = g.clone();
    for (u, v) in &found.word {
        h = pivot(&h, u, v).unwrap();
    }
    assert!(h.same_labeled_graph(&found.chain));
    assert!(is_chain_graph(&h).unwrap());
}

#[test]
fn certificates_and_arborescences_export() {
    let g = fundgraph::graph::named::path(4);
    let cert = supporting_arborescence(&g, Side::A).unwrap();
    let json = serde_json::to_value(&cert).unwrap();
    assert_eq!(json["bijection"].as_object().unwrap().len(), 2);
    assert!(cert.arborescence.to_dot().starts_with("digraph"));
}
