use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::construct::{bdh_recognize, not_bdh, BdhStep};
use crate::error::{Error, Result};
use crate::fundamental::{fundamental_graph, SpanningTree, UnionFind};
use crate::graph::{BipartiteGraph, Edge, Multigraph, Side};

/// A tree whose edges are directed away from `root`. Each edge of `tree`
/// points from `u` (tail) to `v` (head).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arborescence {
    pub tree: Multigraph,
    pub root: usize,
}

impl Arborescence {
    /// `(tail, head)` of the edge with this id.
    pub fn direction(&self, id: &str) -> Option<(usize, usize)> {
        let e = self.tree.edge(self.tree.edge_index(id)?);
        Some((e.u, e.v))
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph T {\n");
        for v in 0..self.tree.vertex_count() {
            if v == self.root {
                s.push_str(&format!("  {v} [shape=doublecircle];\n"));
            } else {
                s.push_str(&format!("  {v};\n"));
            }
        }
        for e in self.tree.edges() {
            s.push_str(&format!("  {} -> {} [label=\"{}\"];\n", e.u, e.v, e.id));
        }
        s.push_str("}\n");
        s
    }

    /// Tree with `n - 1` edges on `n` vertices, every vertex other than the
    /// root entered by exactly one arc.
    fn check(&self) -> std::result::Result<(), String> {
        let n = self.tree.vertex_count();
        if self.tree.edge_count() + 1 != n {
            return Err(format!("{} arcs on {n} vertices", self.tree.edge_count()));
        }
        let mut uf = UnionFind::new(n);
        let mut indeg = vec![0usize; n];
        for e in self.tree.edges() {
            if !uf.union(e.u, e.v) {
                return Err(format!("arc {} closes a cycle", e.id));
            }
            indeg[e.v] += 1;
        }
        for (v, &d) in indeg.iter().enumerate() {
            let want = usize::from(v != self.root);
            if d != want {
                return Err(format!("vertex {v} has in-degree {d}"));
            }
        }
        Ok(())
    }
}

/// Witness that `host_graph` is a path/arborescence bipartite graph with
/// respect to `supported_class`: each vertex of that class is an arc of the
/// arborescence, and the arcs of the neighborhood of any other vertex form a
/// directed path. `cotree_arcs` closes each such path into a directed circuit.
#[derive(Debug, Clone, Serialize)]
pub struct SupportCertificate {
    pub host_graph: BipartiteGraph,
    pub supported_class: Side,
    pub arborescence: Arborescence,
    /// vertex label to arc id
    pub bijection: BTreeMap<String, String>,
    pub cotree_arcs: Vec<Edge>,
}

/// Directed path formed by `arcs`, as `(first tail, last head)`.
fn directed_path(arcs: &[(usize, usize)]) -> Option<(usize, usize)> {
    let mut out: HashMap<usize, usize> = HashMap::new();
    let mut indeg: HashMap<usize, usize> = HashMap::new();
    for &(t, h) in arcs {
        if out.insert(t, h).is_some() {
            return None;
        }
        *indeg.entry(h).or_default() += 1;
        if indeg[&h] > 1 {
            return None;
        }
    }
    let starts: Vec<usize> = out.keys().copied().filter(|t| !indeg.contains_key(t)).collect();
    let [start] = starts[..] else { return None };
    let mut x = start;
    let mut steps = 0;
    while let Some(&y) = out.get(&x) {
        x = y;
        steps += 1;
        if steps > arcs.len() {
            return None;
        }
    }
    (steps == arcs.len()).then_some((start, x))
}

/// Checks a certificate edge by edge against its host graph.
pub fn verify_certificate(cert: &SupportCertificate) -> std::result::Result<(), String> {
    let g = &cert.host_graph;
    let arb = &cert.arborescence;
    arb.check()?;
    let class = g.class(cert.supported_class);
    if class.len() != arb.tree.edge_count() || cert.bijection.len() != class.len() {
        return Err("bijection does not cover the supported class".into());
    }
    let mut arc_of = HashMap::new();
    for label in class {
        let id = cert.bijection.get(label).ok_or_else(|| format!("{label} has no arc"))?;
        let dir = arb.direction(id).ok_or_else(|| format!("{id} is not an arc"))?;
        arc_of.insert(label.as_str(), dir);
    }
    let other = g.class(cert.supported_class.other());
    if cert.cotree_arcs.len() != other.len() {
        return Err("one closing arc per vertex of the other class is required".into());
    }
    for (b, closing) in other.iter().zip(&cert.cotree_arcs) {
        let v = g.index_of(b).unwrap();
        let mut arcs: Vec<(usize, usize)> = g.neighbors(v).iter().map(|&x| arc_of[g.label(x)]).collect();
        arcs.push((closing.u, closing.v));
        if closing.id != *b || !is_directed_circuit(&arcs) {
            return Err(format!("neighborhood of {b} does not close into a directed circuit"));
        }
    }
    Ok(())
}

/// The arcs form a single directed simple cycle.
fn is_directed_circuit(arcs: &[(usize, usize)]) -> bool {
    let Some(&(t, h)) = arcs.last() else { return false };
    match directed_path(&arcs[..arcs.len() - 1]) {
        Some((start, end)) => end == t && start == h,
        None => false,
    }
}

/// Builds a supporting arborescence for `cls` along a defining sequence whose
/// first vertex lies in `cls`, re-verifying the partial certificate after each step.
pub fn supporting_arborescence(g: &BipartiteGraph, cls: Side) -> Result<SupportCertificate> {
    if g.class(cls).is_empty() {
        return Err(Error::precondition("the supported class is empty"));
    }
    let Some(mut seq) = bdh_recognize(g)? else {
        return Err(not_bdh(g));
    };
    let first = seq.steps[0].new_label().to_string();
    if g.side(g.index_of(&first).unwrap()) != cls {
        seq = crate::construct::reroot(&seq);
    }
    let mut arcs: Vec<Edge> = Vec::new();
    let mut vertices = 1usize;
    let mut introduced: Vec<String> = Vec::new();
    for (k, step) in seq.steps.iter().enumerate() {
        let v = step.new_label();
        let in_cls = g.side(g.index_of(v).unwrap()) == cls;
        introduced.push(v.to_string());
        let partial = g.induced_subgraph(&introduced)?;
        if in_cls {
            let candidates = match step {
                BdhStep::Initial { .. } => {
                    vertices = 2;
                    vec![vec![Edge::new(v, 0, 1)]]
                }
                BdhStep::Twin { of, .. } => {
                    let w = arcs.iter().position(|e| e.id == *of).unwrap();
                    let (alpha, beta) = (arcs[w].u, arcs[w].v);
                    let z = vertices;
                    vertices += 1;
                    let mut next = arcs.clone();
                    next[w] = Edge::new(of.clone(), alpha, z);
                    next.push(Edge::new(v, z, beta));
                    vec![next]
                }
                BdhStep::Pending { attach_to, .. } => {
                    let z_new = vertices;
                    vertices += 1;
                    let prev = g.induced_subgraph(&introduced[..k])?;
                    let w = prev.index_of(attach_to).unwrap();
                    let path: Vec<(usize, usize)> = prev
                        .neighbors(w)
                        .iter()
                        .map(|&x| {
                            let e = arcs.iter().find(|e| e.id == prev.label(x)).unwrap();
                            (e.u, e.v)
                        })
                        .collect();
                    let mut options = Vec::new();
                    if let Some((_, end)) = directed_path(&path) {
                        let mut next = arcs.clone();
                        next.push(Edge::new(v, end, z_new));
                        options.push(next);
                    }
                    // the same with the previous orientation reversed
                    let reversed: Vec<(usize, usize)> = path.iter().map(|&(t, h)| (h, t)).collect();
                    if let Some((_, end)) = directed_path(&reversed) {
                        let mut next: Vec<Edge> =
                            arcs.iter().map(|e| Edge::new(e.id.clone(), e.v, e.u)).collect();
                        next.push(Edge::new(v, end, z_new));
                        options.push(next);
                    }
                    options
                }
            };
            arcs = candidates
                .into_iter()
                .find(|cand| certificate(&partial, cls, cand, vertices).is_ok())
                .ok_or_else(|| {
                Error::internal(format!("supporting arborescence fails verification at step {k}"))
            })?;
        } else if k > 0 {
            certificate(&partial, cls, &arcs, vertices)
                .map_err(|_| Error::internal(format!("supporting arborescence fails verification at step {k}")))?;
        }
    }
    certificate(g, cls, &arcs, vertices)
}

fn certificate(g: &BipartiteGraph, cls: Side, arcs: &[Edge], vertices: usize) -> Result<SupportCertificate> {
    let tree = Multigraph::new(vertices, arcs.to_vec())?;
    let arborescence = Arborescence { tree, root: 0 };
    let arc_of: HashMap<&str, (usize, usize)> = arcs.iter().map(|e| (e.id.as_str(), (e.u, e.v))).collect();
    let mut cotree_arcs = Vec::new();
    for b in g.class(cls.other()) {
        let v = g.index_of(b).unwrap();
        let path: Vec<(usize, usize)> = g.neighbors(v).iter().map(|&x| arc_of[g.label(x)]).collect();
        let (start, end) = directed_path(&path)
            .ok_or_else(|| Error::internal(format!("neighborhood of {b} is not a directed path")))?;
        cotree_arcs.push(Edge::new(b.clone(), end, start));
    }
    let cert = SupportCertificate {
        host_graph: g.clone(),
        supported_class: cls,
        arborescence,
        bijection: g.class(cls).iter().map(|l| (l.clone(), l.clone())).collect(),
        cotree_arcs,
    };
    verify_certificate(&cert).map_err(Error::internal)?;
    Ok(cert)
}

/// Orientation of the graph `(V(T), A ∪ B)` built from a supporting
/// arborescence of `B_H(T)`: `tree` is directed away from `root` and every
/// fundamental circuit is a directed circuit. The host is 2-isomorphic to
/// the input graph and keeps its edge ids; each edge points from `u` to `v`.
#[derive(Debug, Clone, Serialize)]
pub struct DfsOrientation {
    pub host: Multigraph,
    pub tree: SpanningTree,
    pub root: usize,
}

/// `None` when the fundamental graph of `(h, t)` has no supporting
/// arborescence for the tree class.
pub fn dfs_tree_check(h: &Multigraph, t: &SpanningTree) -> Result<Option<DfsOrientation>> {
    if !h.is_two_connected() {
        return Err(Error::input("dfs_tree_check requires a 2-connected graph"));
    }
    let g = fundamental_graph(h, t)?;
    let cert = match supporting_arborescence(&g, Side::A) {
        Ok(c) => c,
        Err(Error::Domain { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let arb = &cert.arborescence;
    let mut edges = Vec::with_capacity(h.edge_count());
    for e in h.edges() {
        let (u, v) = match arb.direction(&e.id) {
            Some(d) => d,
            None => {
                let c = cert.cotree_arcs.iter().find(|c| c.id == e.id).unwrap();
                (c.u, c.v)
            }
        };
        edges.push(Edge::new(e.id.clone(), u, v));
    }
    let host = Multigraph::new(arb.tree.vertex_count(), edges)?;
    let tree = SpanningTree::new(&host, t.edges())?;
    if !fundamental_graph(&host, &tree)?.same_labeled_graph(&g) {
        return Err(Error::internal("oriented copy has a different fundamental graph"));
    }
    Ok(Some(DfsOrientation { host, tree, root: arb.root }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn k2_gives_a_single_arc() {
        let c = supporting_arborescence(&named::k2(), Side::A).unwrap();
        assert_eq!(c.arborescence.tree.edge_count(), 1);
        assert_eq!(c.arborescence.direction("a0"), Some((0, 1)));
    }

    #[test]
    fn p3_supported_by_its_two_vertex_class() {
        // a0 - b0 - a1: the middle vertex sees both arcs
        let p3 = BipartiteGraph::from_labels(&["a0", "a1"], &["b0"], &[("a0", "b0"), ("a1", "b0")]).unwrap();
        let c = supporting_arborescence(&p3, Side::A).unwrap();
        let arb = &c.arborescence;
        assert_eq!(arb.tree.edge_count(), 2);
        let (t0, h0) = arb.direction("a0").unwrap();
        let (t1, h1) = arb.direction("a1").unwrap();
        assert!(h0 == t1 || h1 == t0);
        assert!(verify_certificate(&c).is_ok());
    }

    #[test]
    fn c6_is_rejected() {
        assert!(matches!(supporting_arborescence(&named::cycle(6), Side::A), Err(Error::Domain { .. })));
    }

    #[test]
    fn tampered_certificate_fails() {
        let mut c = supporting_arborescence(&named::path(5), Side::B).unwrap();
        assert!(verify_certificate(&c).is_ok());
        let e = &mut c.cotree_arcs[0];
        std::mem::swap(&mut e.u, &mut e.v);
        assert!(verify_certificate(&c).is_err());
    }

    #[test]
    fn digon_tree_is_oriented() {
        let digon = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        let t = SpanningTree::new(&digon, &["e1"]).unwrap();
        let o = dfs_tree_check(&digon, &t).unwrap().unwrap();
        assert_eq!(o.host.edge_count(), 2);
    }
}
