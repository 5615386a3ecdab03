use crate::construct::{bdh_recognize, not_bdh, BdhStep};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge, Multigraph, Side};
use crate::pivot::pivot_equivalent;

use super::tree::{fundamental_graph, SpanningTree};

/// Desk-scale guard for 2-isomorphism testing.
pub const MAX_TWO_ISO_EDGES: usize = 12;

/// Realizes a connected BDH graph as a fundamental graph: returns a
/// 2-connected SP graph `H` with spanning tree `T` such that `B_H(T)` is `g`
/// itself, class A being the tree. Edge ids of `H` are the vertex labels of `g`.
///
/// The defining sequence is replayed as series and parallel extensions:
/// a pending vertex on a tree vertex becomes a parallel copy of that tree
/// edge, a tree twin subdivides the tree edge, a co-tree twin is a parallel
/// copy of the co-tree edge, and a tree vertex pending on a co-tree vertex
/// subdivides the co-tree edge.
pub fn bdh_to_sp(g: &BipartiteGraph) -> Result<(Multigraph, SpanningTree)> {
    if g.vertex_count() < 2 {
        return Err(Error::input("a fundamental graph has at least one tree and one co-tree edge"));
    }
    let seq = bdh_recognize(g)?.ok_or_else(|| not_bdh(g))?;
    let side = seq.sides()?;
    let mut edges: Vec<Edge> = Vec::with_capacity(seq.len());
    let mut n = 2;
    let find = |edges: &[Edge], id: &str| edges.iter().position(|e| e.id == id).unwrap();
    for (k, step) in seq.steps.iter().enumerate() {
        match step {
            BdhStep::Initial { label } => edges.push(Edge::new(label.clone(), 0, 1)),
            BdhStep::Pending { attach_to, new_label } if k == 1 => {
                debug_assert_eq!(edges[0].id, *attach_to);
                edges.push(Edge::new(new_label.clone(), 0, 1));
            }
            BdhStep::Pending { attach_to, new_label } => {
                let e = edges[find(&edges, attach_to)].clone();
                if side[new_label.as_str()] == Side::B {
                    edges.push(Edge::new(new_label.clone(), e.u, e.v));
                } else {
                    subdivide(&mut edges, &mut n, &e.id, new_label);
                }
            }
            BdhStep::Twin { of, new_label } => {
                let e = edges[find(&edges, of)].clone();
                if side[new_label.as_str()] == Side::A {
                    subdivide(&mut edges, &mut n, &e.id, new_label);
                } else {
                    edges.push(Edge::new(new_label.clone(), e.u, e.v));
                }
            }
        }
    }
    let host = Multigraph::new(n, edges)?;
    let tree = SpanningTree::new(&host, g.class_a())?;
    let check = fundamental_graph(&host, &tree)?;
    if !check.same_labeled_graph(g) {
        return Err(Error::internal("series-parallel realization does not reproduce the input graph"));
    }
    Ok((host, tree))
}

fn subdivide(edges: &mut Vec<Edge>, n: &mut usize, id: &str, new_id: &str) {
    let k = edges.iter().position(|e| e.id == id).unwrap();
    let (u, v) = (edges[k].u, edges[k].v);
    let z = *n;
    *n += 1;
    edges[k] = Edge::new(id, u, z);
    edges.push(Edge::new(new_id, z, v));
}

/// Whether two 2-connected multigraphs have isomorphic cycle matroids,
/// decided by pivot equivalence of one fundamental graph of each.
pub fn two_isomorphic(h1: &Multigraph, h2: &Multigraph) -> Result<bool> {
    for h in [h1, h2] {
        if !h.is_two_connected() {
            return Err(Error::input("2-isomorphism testing requires 2-connected graphs"));
        }
        if h.edge_count() > MAX_TWO_ISO_EDGES {
            return Err(Error::capacity(format!(
                "2-isomorphism testing is limited to {MAX_TWO_ISO_EDGES} edges"
            )));
        }
    }
    if h1.edge_count() != h2.edge_count() || h1.vertex_count() != h2.vertex_count() {
        return Ok(false);
    }
    let g1 = fundamental_graph(h1, &first_tree(h1)?)?;
    let g2 = fundamental_graph(h2, &first_tree(h2)?)?;
    pivot_equivalent(&g1, &g2)
}

/// Greedy spanning tree over the edges in host order.
pub(crate) fn first_tree(h: &Multigraph) -> Result<SpanningTree> {
    let mut uf = super::tree::UnionFind::new(h.vertex_count());
    let mask: Vec<bool> = h.edges().iter().map(|e| uf.union(e.u, e.v)).collect();
    SpanningTree::from_mask(h, &mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, CanonicalForm};

    #[test]
    fn k2_becomes_a_digon() {
        let (h, t) = bdh_to_sp(&named::k2()).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (2, 2));
        assert_eq!(t.edges(), &["a0".to_string()]);
    }

    #[test]
    fn c6_is_rejected_with_a_hole() {
        match bdh_to_sp(&named::cycle(6)) {
            Err(Error::Domain { witness: Some(w), .. }) => assert_eq!(w.len(), 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn p3_with_cotree_middle_is_a_triangle() {
        let p3 = BipartiteGraph::from_labels(&["x", "y"], &["m"], &[("x", "m"), ("y", "m")]).unwrap();
        let (h, t) = bdh_to_sp(&p3).unwrap();
        let tri = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(h.canonical_key().unwrap(), tri.canonical_key().unwrap());
        assert_eq!(t.edges().len(), 2);
    }

    #[test]
    fn realization_reproduces_labeled_graphs() {
        for g in [named::path(6), named::star(4), named::complete(3, 3), named::arrow(), named::t2()] {
            let (h, t) = bdh_to_sp(&g).unwrap();
            assert!(h.is_two_connected());
            assert!(fundamental_graph(&h, &t).unwrap().same_labeled_graph(&g));
            let swapped = g.swap_classes();
            let (h2, t2) = bdh_to_sp(&swapped).unwrap();
            assert!(fundamental_graph(&h2, &t2).unwrap().same_labeled_graph(&swapped));
        }
    }

    /// Two non-isomorphic graphs related by a Whitney twist.
    pub(crate) fn twisted_pair() -> (Multigraph, Multigraph) {
        let h1 = Multigraph::from_pairs(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (3, 5)]).unwrap();
        let h2 = Multigraph::from_pairs(6, &[(3, 1), (1, 2), (2, 0), (3, 2), (3, 4), (4, 5), (5, 0), (3, 5)]).unwrap();
        (h1, h2)
    }

    #[test]
    fn two_isomorphism() {
        let (h1, h2) = twisted_pair();
        assert_ne!(h1.canonical_key().unwrap(), h2.canonical_key().unwrap());
        assert!(two_isomorphic(&h1, &h2).unwrap());
        assert!(two_isomorphic(&h1, &h1).unwrap());
        let k4 = Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c6 = Multigraph::from_pairs(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(!two_isomorphic(&k4, &c6).unwrap());
    }
}
