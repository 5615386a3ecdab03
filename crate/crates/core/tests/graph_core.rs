mod common;

use common::{bipartite_strategy, brute_isomorphic};
use fundgraph::enumerate::connected_bipartite_up_to;
use fundgraph::graph::{find_induced, named, DoubleOccurrenceWord, Pattern};
use fundgraph::pivot::pivot;
use fundgraph::{BipartiteGraph, CanonicalForm};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

#[test]
fn canonical_keys_agree_with_brute_force_isomorphism() {
    let graphs: Vec<BipartiteGraph> = connected_bipartite_up_to(7).into_iter().flatten().collect();
    for (i, g) in graphs.iter().enumerate() {
        for h in &graphs[i..] {
            if g.vertex_count() != h.vertex_count() {
                continue;
            }
            let same_key = g.canonical_key().unwrap() == h.canonical_key().unwrap();
            assert_eq!(same_key, brute_isomorphic(g, h), "{g:?} vs {h:?}");
        }
    }
}

fn relabel(g: &BipartiteGraph, seed: u64) -> BipartiteGraph {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut pa: Vec<usize> = (0..g.class_a().len()).collect();
    let mut pb: Vec<usize> = (0..g.class_b().len()).collect();
    pa.shuffle(&mut rng);
    pb.shuffle(&mut rng);
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(i, j)| (pa[i], pb[j])).collect();
    BipartiteGraph::from_edges(pa.len(), pb.len(), &edges).unwrap()
}

proptest! {
    #[test]
    fn keys_are_invariant_and_complete_on_random_graphs(g in bipartite_strategy(4), h in bipartite_strategy(4), seed in any::<u64>()) {
        let r = relabel(&g, seed);
        prop_assert_eq!(g.canonical_key().unwrap(), r.canonical_key().unwrap());
        prop_assert_eq!(g.canonical_key().unwrap(), g.swap_classes().canonical_key().unwrap());
        prop_assert_eq!(g.canonical_key().unwrap() == h.canonical_key().unwrap(), brute_isomorphic(&g, &h));
    }

    #[test]
    fn induced_witnesses_are_genuine(g in bipartite_strategy(5)) {
        for p in [Pattern::Hole, Pattern::Domino, Pattern::Arrow, Pattern::T2, Pattern::TwoK2, Pattern::C6] {
            let Some(w) = find_induced(&g, p).unwrap() else { continue };
            let sub = g.induced_subgraph(&w).unwrap();
            match p {
                Pattern::Hole | Pattern::C6 => {
                    prop_assert!(w.len() >= 6);
                    prop_assert!(p != Pattern::C6 || w.len() == 6);
                    prop_assert!(sub.is_connected());
                    prop_assert!((0..sub.vertex_count()).all(|v| sub.degree(v) == 2));
                }
                Pattern::TwoK2 => {
                    prop_assert_eq!(sub.edge_count(), 2);
                    prop_assert!((0..4).all(|v| sub.degree(v) == 1));
                }
                _ => {
                    let target = match p {
                        Pattern::Domino => named::domino(),
                        Pattern::Arrow => named::arrow(),
                        _ => named::t2(),
                    };
                    prop_assert!(brute_isomorphic(&sub, &target));
                }
            }
        }
    }

    #[test]
    fn interlacement_ignores_rotation_and_reversal(perm in Just((0..12).map(|k| (b'a' + (k / 2) as u8) as char).collect::<Vec<_>>()).prop_shuffle(), r in 0usize..12) {
        let w = DoubleOccurrenceWord::new(perm).unwrap();
        let g = w.interlacement_graph().unwrap().labeled_edge_set();
        prop_assert_eq!(&g, &w.rotated(r).interlacement_graph().unwrap().labeled_edge_set());
        prop_assert_eq!(&g, &w.reversed().interlacement_graph().unwrap().labeled_edge_set());
    }

    #[test]
    fn transposition_is_an_involution(perm in Just((0..10).map(|k| (b'a' + (k / 2) as u8) as char).collect::<Vec<_>>()).prop_shuffle()) {
        let w = DoubleOccurrenceWord::new(perm).unwrap();
        let alphabet = w.alphabet();
        for &a in &alphabet {
            for &b in &alphabet {
                if w.interlaced(a, b) {
                    let t = w.transposition(a, b).unwrap();
                    prop_assert!(t.transposition(a, b).unwrap().cyclically_equivalent(&w));
                }
            }
        }
    }
}

#[test]
fn transposition_realizes_pivoting_on_bipartite_interlacement_graphs() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 2000 {
        let k = 2 + rand::Rng::random_range(&mut rng, 0..7);
        let mut s: Vec<char> = (0..2 * k).map(|i| (b'a' + (i / 2) as u8) as char).collect();
        s.shuffle(&mut rng);
        let w = DoubleOccurrenceWord::new(s).unwrap();
        let Some(g) = BipartiteGraph::from_labeled(&w.interlacement_graph().unwrap()) else { continue };
        for (u, v) in g.edge_labels() {
            let (a, b) = (u.chars().next().unwrap(), v.chars().next().unwrap());
            let lhs = w.transposition(a, b).unwrap().interlacement_graph().unwrap();
            let rhs = pivot(&g, &u, &v).unwrap().to_labeled().unwrap();
            let mut l = lhs.labeled_edge_set();
            let mut r = rhs.labeled_edge_set();
            l.sort();
            r.sort();
            assert_eq!(l, r, "{w} on {u}{v}");
            checked += 1;
        }
    }
}

#[test]
fn json_round_trip() {
    let g = named::domino();
    let s = serde_json::to_string(&g).unwrap();
    let back: BipartiteGraph = serde_json::from_str(&s).unwrap();
    assert!(back.same_labeled_graph(&g));
    assert!(serde_json::from_str::<BipartiteGraph>(r#"{"a": ["x"], "b": ["x"], "edges": []}"#).is_err());
    assert!(serde_json::from_str::<BipartiteGraph>(r#"{"a": ["x"], "b": ["y"], "edges": [[0, 3]]}"#).is_err());
}
