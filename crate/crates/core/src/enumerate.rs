//! Exhaustive and random generators for the test suites and the CLI.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::construct::{BdhStep, DefiningSequence, SpConstruction, SpStep};
use crate::error::Result;
use crate::fundamental::{SpanningTree, UnionFind};
use crate::graph::canon::{bipartite_key_unchecked, labeled_key_unchecked};
use crate::graph::{BipartiteGraph, CanonicalKey, Multigraph};

/// Connected bipartite graphs with exactly `n` vertices, one per isomorphism
/// class (classes may be swapped). Labels are `a0.., b0..`.
pub fn connected_bipartite(n: usize) -> Vec<BipartiteGraph> {
    connected_bipartite_up_to(n).pop().unwrap_or_default()
}

/// `out[k]` holds the connected bipartite graphs on `k + 1` vertices.
pub fn connected_bipartite_up_to(n: usize) -> Vec<Vec<BipartiteGraph>> {
    let mut levels: Vec<Vec<BipartiteGraph>> = Vec::new();
    if n == 0 {
        return levels;
    }
    levels.push(vec![BipartiteGraph::from_edges(1, 0, &[]).unwrap()]);
    for _ in 1..n {
        let prev = levels.last().unwrap();
        let mut seen: HashSet<CanonicalKey> = HashSet::new();
        let mut next = Vec::new();
        // every connected graph has a vertex whose removal leaves it connected
        for g in prev {
            let (na, nb) = (g.class_a().len(), g.class_b().len());
            let base = g.edges();
            for new_in_a in [true, false] {
                let other = if new_in_a { nb } else { na };
                for mask in 1u64..1 << other {
                    let mut edges = base.clone();
                    let (na2, nb2) = if new_in_a { (na + 1, nb) } else { (na, nb + 1) };
                    for j in 0..other {
                        if mask >> j & 1 == 1 {
                            edges.push(if new_in_a { (na, j) } else { (j, nb) });
                        }
                    }
                    let h = BipartiteGraph::from_edges(na2, nb2, &edges).unwrap();
                    if seen.insert(bipartite_key_unchecked(&h)) {
                        next.push(h);
                    }
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// Simple graphs on exactly `n` vertices up to isomorphism, as multigraphs
/// with edge ids `e1, e2, ...`.
pub fn simple_graphs(n: usize) -> Vec<Multigraph> {
    let mut level: Vec<Vec<u64>> = vec![vec![]];
    for k in 0..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for mask in 0u64..1 << k {
                let mut a = adj.clone();
                a.push(mask);
                for (j, row) in a.iter_mut().enumerate().take(k) {
                    if mask >> j & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                if seen.insert(labeled_key_unchecked(&a)) {
                    next.push(a);
                }
            }
        }
        level = next;
    }
    level
        .iter()
        .map(|adj| {
            let mut pairs = Vec::new();
            for (u, &m) in adj.iter().enumerate() {
                for v in u + 1..n {
                    if m >> v & 1 == 1 {
                        pairs.push((u, v));
                    }
                }
            }
            Multigraph::from_pairs(n, &pairs).unwrap()
        })
        .collect()
}

/// 2-connected simple graphs on `3..=n` vertices up to isomorphism.
pub fn two_connected_simple(n: usize) -> Vec<Multigraph> {
    (3..=n).flat_map(simple_graphs).filter(|g| g.is_two_connected()).collect()
}

/// Random defining sequence on `n >= 1` vertices labeled `v1..vn`.
pub fn random_defining_sequence<R: Rng>(rng: &mut R, n: usize) -> DefiningSequence {
    let label = |k: usize| format!("v{}", k + 1);
    let mut steps = vec![BdhStep::Initial { label: label(0) }];
    for k in 1..n {
        let target = label(rng.random_range(0..k));
        let step = if k == 1 || rng.random_bool(0.5) {
            BdhStep::Pending { attach_to: target, new_label: label(k) }
        } else {
            BdhStep::Twin { of: target, new_label: label(k) }
        };
        steps.push(step);
    }
    DefiningSequence::new(steps)
}

/// Random series-parallel construction with `steps` steps after the digon,
/// edges labeled `e1, e2, ...`.
pub fn random_sp_construction<R: Rng>(rng: &mut R, steps: usize) -> SpConstruction {
    let mut out = vec![SpStep::Digon { edges: ["e1".into(), "e2".into()] }];
    for k in 0..steps {
        let old = format!("e{}", rng.random_range(0..k + 2) + 1);
        let new = format!("e{}", k + 3);
        out.push(if rng.random_bool(0.5) {
            SpStep::Parallel { of: old, new_edge: new }
        } else {
            SpStep::Series { subdivide: old, new_edge: new, new_vertex: None }
        });
    }
    SpConstruction::new(out)
}

/// Spanning tree of a connected graph, by Kruskal over a random edge order.
pub fn random_spanning_tree<R: Rng>(rng: &mut R, h: &Multigraph) -> Result<SpanningTree> {
    let mut order: Vec<usize> = (0..h.edge_count()).collect();
    order.shuffle(rng);
    let mut uf = UnionFind::new(h.vertex_count());
    let mut mask = vec![false; h.edge_count()];
    for k in order {
        let e = h.edge(k);
        if uf.union(e.u, e.v) {
            mask[k] = true;
        }
    }
    SpanningTree::from_mask(h, &mask)
}
