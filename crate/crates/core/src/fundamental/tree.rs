use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::graph::{BipartiteGraph, Multigraph};

/// Default cap on the number of spanning trees enumerated per host.
pub const DEFAULT_TREE_CAP: usize = 5000;

/// A spanning tree given by its edge ids, listed in host edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpanningTree {
    edges: Vec<String>,
}

pub(crate) struct UnionFind(Vec<usize>);

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    /// Returns false when `x` and `y` were already joined.
    pub(crate) fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.0[rx] = ry;
        true
    }
}

impl SpanningTree {
    /// Validates that `ids` form a spanning tree of `host`.
    pub fn new<S: AsRef<str>>(host: &Multigraph, ids: &[S]) -> Result<Self> {
        let mut mask = vec![false; host.edge_count()];
        for id in ids {
            let k = host
                .edge_index(id.as_ref())
                .ok_or_else(|| Error::input(format!("unknown tree edge {}", id.as_ref())))?;
            if mask[k] {
                return Err(Error::input(format!("tree edge {} listed twice", id.as_ref())));
            }
            mask[k] = true;
        }
        Self::from_mask(host, &mask)
    }

    pub fn from_mask(host: &Multigraph, mask: &[bool]) -> Result<Self> {
        let n = host.vertex_count();
        let mut uf = UnionFind::new(n);
        let mut count = 0;
        for (k, e) in host.edges().iter().enumerate() {
            if mask[k] {
                if !uf.union(e.u, e.v) {
                    return Err(Error::input(format!("tree edges contain a cycle through {}", e.id)));
                }
                count += 1;
            }
        }
        if n > 0 && count != n - 1 {
            return Err(Error::input(format!("a spanning tree has {} edges, got {count}", n - 1)));
        }
        Ok(SpanningTree {
            edges: host
                .edges()
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask[k])
                .map(|(_, e)| e.id.clone())
                .collect(),
        })
    }

    pub fn edges(&self) -> &[String] {
        &self.edges
    }

    pub fn contains(&self, id: &str) -> bool {
        self.edges.iter().any(|e| e == id)
    }

    /// Indicator over host edge indices.
    pub fn mask(&self, host: &Multigraph) -> Result<Vec<bool>> {
        let mut mask = vec![false; host.edge_count()];
        for id in &self.edges {
            let k = host
                .edge_index(id)
                .ok_or_else(|| Error::input(format!("tree edge {id} is not in the host")))?;
            mask[k] = true;
        }
        Ok(mask)
    }

    /// Co-tree edge ids in host order.
    pub fn cotree(&self, host: &Multigraph) -> Result<Vec<String>> {
        let mask = self.mask(host)?;
        Ok(host
            .edges()
            .iter()
            .enumerate()
            .filter(|&(k, _)| !mask[k])
            .map(|(_, e)| e.id.clone())
            .collect())
    }
}

/// All spanning trees of a connected host, by include/exclude branching on
/// edges in host order. Fails when more than `cap` trees exist.
pub fn spanning_trees(host: &Multigraph, cap: usize) -> Result<Vec<SpanningTree>> {
    if !host.is_connected() {
        return Err(Error::input("spanning trees need a connected host"));
    }
    let m = host.edge_count();
    let n = host.vertex_count();
    let mut out = Vec::new();
    let mut state = vec![None; m];
    branch(host, n, 0, &mut state, &mut out, cap)?;
    Ok(out)
}

fn branch(
    host: &Multigraph,
    n: usize,
    k: usize,
    state: &mut Vec<Option<bool>>,
    out: &mut Vec<SpanningTree>,
    cap: usize,
) -> Result<()> {
    let chosen = state.iter().filter(|s| **s == Some(true)).count();
    if chosen + 1 == n || n <= 1 {
        if out.len() == cap {
            return Err(Error::capacity(format!("more than {cap} spanning trees")));
        }
        let mask: Vec<bool> = state.iter().map(|s| *s == Some(true)).collect();
        out.push(SpanningTree::from_mask(host, &mask)?);
        return Ok(());
    }
    if k == state.len() {
        return Ok(());
    }
    let e = host.edge(k);
    let mut uf = UnionFind::new(n);
    for (j, s) in state.iter().enumerate() {
        if *s == Some(true) {
            let f = host.edge(j);
            uf.union(f.u, f.v);
        }
    }
    if uf.find(e.u) != uf.find(e.v) {
        state[k] = Some(true);
        branch(host, n, k + 1, state, out, cap)?;
    }
    state[k] = Some(false);
    if still_connected(host, n, state) {
        branch(host, n, k + 1, state, out, cap)?;
    }
    state[k] = None;
    Ok(())
}

fn still_connected(host: &Multigraph, n: usize, state: &[Option<bool>]) -> bool {
    let mut uf = UnionFind::new(n);
    let mut parts = n;
    for (j, s) in state.iter().enumerate() {
        if *s != Some(false) {
            let f = host.edge(j);
            if uf.union(f.u, f.v) {
                parts -= 1;
            }
        }
    }
    parts == 1
}

/// The unique circuit in `T + f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundamentalCircuit {
    pub cotree_edge: String,
    /// Includes the co-tree edge; the remaining edges form the tree path
    /// between its ends, listed from its first end.
    pub circuit_edges: Vec<String>,
}

/// Parent pointers of the tree rooted at vertex 0: `(parent, edge index)`.
struct Rooted {
    parent: Vec<Option<(usize, usize)>>,
    depth: Vec<usize>,
}

fn root_tree(host: &Multigraph, mask: &[bool]) -> Rooted {
    let n = host.vertex_count();
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    let adj = host.adjacency_lists();
    let mut queue = VecDeque::new();
    if n > 0 {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(x) = queue.pop_front() {
        for &(y, k) in &adj[x] {
            if mask[k] && !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, k));
                depth[y] = depth[x] + 1;
                queue.push_back(y);
            }
        }
    }
    Rooted { parent, depth }
}

impl Rooted {
    /// Tree edge indices on the path from `x` to `y`, in order from `x`.
    fn path(&self, mut x: usize, mut y: usize) -> Vec<usize> {
        let mut from_x = Vec::new();
        let mut from_y = Vec::new();
        while self.depth[x] > self.depth[y] {
            let (p, k) = self.parent[x].unwrap();
            from_x.push(k);
            x = p;
        }
        while self.depth[y] > self.depth[x] {
            let (p, k) = self.parent[y].unwrap();
            from_y.push(k);
            y = p;
        }
        while x != y {
            let (px, kx) = self.parent[x].unwrap();
            let (py, ky) = self.parent[y].unwrap();
            from_x.push(kx);
            from_y.push(ky);
            x = px;
            y = py;
        }
        from_y.reverse();
        from_x.extend(from_y);
        from_x
    }
}

/// Tree path of every co-tree edge, as host edge indices.
pub(crate) fn fundamental_paths(host: &Multigraph, tree: &SpanningTree) -> Result<Vec<(usize, Vec<usize>)>> {
    let mask = tree.mask(host)?;
    let rooted = root_tree(host, &mask);
    Ok(host
        .edges()
        .iter()
        .enumerate()
        .filter(|&(k, _)| !mask[k])
        .map(|(k, e)| (k, rooted.path(e.u, e.v)))
        .collect())
}

pub fn fundamental_circuit(host: &Multigraph, tree: &SpanningTree, f: &str) -> Result<FundamentalCircuit> {
    let k = host
        .edge_index(f)
        .ok_or_else(|| Error::input(format!("unknown edge {f}")))?;
    if tree.contains(f) {
        return Err(Error::input(format!("{f} is a tree edge")));
    }
    let mask = tree.mask(host)?;
    let rooted = root_tree(host, &mask);
    let e = host.edge(k);
    let mut circuit_edges = vec![f.to_string()];
    circuit_edges.extend(rooted.path(e.u, e.v).into_iter().map(|j| host.edge(j).id.clone()));
    Ok(FundamentalCircuit { cotree_edge: f.to_string(), circuit_edges })
}

/// `B_H(T)`: class A holds the tree edges, class B the co-tree edges, and a
/// tree edge is adjacent to a co-tree edge when it lies on its fundamental circuit.
pub fn fundamental_graph(host: &Multigraph, tree: &SpanningTree) -> Result<BipartiteGraph> {
    let tree = SpanningTree::new(host, tree.edges())?;
    if !host.is_connected() {
        return Err(Error::input("fundamental graphs need a connected host"));
    }
    let mask = tree.mask(host)?;
    let rows: Vec<usize> = (0..host.edge_count()).filter(|&k| mask[k]).collect();
    let mut row_of = vec![usize::MAX; host.edge_count()];
    for (i, &k) in rows.iter().enumerate() {
        row_of[k] = i;
    }
    let paths = fundamental_paths(host, &tree)?;
    let mut m = Gf2Matrix::zeros(rows.len(), paths.len());
    for (j, (_, path)) in paths.iter().enumerate() {
        for &k in path {
            m.set(row_of[k], j, true);
        }
    }
    BipartiteGraph::from_matrix(
        rows.iter().map(|&k| host.edge(k).id.clone()).collect(),
        paths.iter().map(|(k, _)| host.edge(*k).id.clone()).collect(),
        m,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, CanonicalForm};

    pub(crate) fn k4() -> Multigraph {
        Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn tree_validation() {
        let g = k4();
        assert!(SpanningTree::new(&g, &["e1", "e2", "e3"]).is_ok());
        assert!(SpanningTree::new(&g, &["e1", "e2", "e4"]).is_err());
        assert!(SpanningTree::new(&g, &["e1", "e2"]).is_err());
        assert!(SpanningTree::new(&g, &["e1", "e2", "zz"]).is_err());
    }

    #[test]
    fn spanning_tree_counts() {
        // Cayley: K4 has 16 trees; a digon has 2; C5 has 5
        assert_eq!(spanning_trees(&k4(), 100).unwrap().len(), 16);
        let digon = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(spanning_trees(&digon, 100).unwrap().len(), 2);
        let c5 = Multigraph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(spanning_trees(&c5, 100).unwrap().len(), 5);
        assert!(matches!(spanning_trees(&k4(), 10), Err(Error::Capacity(_))));
    }

    #[test]
    fn fundamental_graphs_of_k4() {
        let g = k4();
        let star = SpanningTree::new(&g, &["e1", "e2", "e3"]).unwrap();
        let b = fundamental_graph(&g, &star).unwrap();
        assert_eq!(b.canonical_key().unwrap(), named::cycle(6).canonical_key().unwrap());
        // Hamiltonian path 1-0-2-3 uses e1, e2, e6
        let path = SpanningTree::new(&g, &["e1", "e2", "e6"]).unwrap();
        let b = fundamental_graph(&g, &path).unwrap();
        assert_eq!(b.canonical_key().unwrap(), named::domino().canonical_key().unwrap());
    }

    #[test]
    fn small_fundamental_graphs() {
        let digon = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        let t = SpanningTree::new(&digon, &["e1"]).unwrap();
        assert_eq!(fundamental_graph(&digon, &t).unwrap().canonical_key().unwrap(), named::k2().canonical_key().unwrap());
        let tri = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let t = SpanningTree::new(&tri, &["e1", "e2"]).unwrap();
        let b = fundamental_graph(&tri, &t).unwrap();
        assert_eq!(b.class_b(), &["e3".to_string()]);
        assert_eq!(b.degree(b.index_of("e3").unwrap()), 2);
    }

    #[test]
    fn circuit_is_the_tree_path_plus_the_edge() {
        let g = k4();
        let t = SpanningTree::new(&g, &["e1", "e2", "e6"]).unwrap();
        let c = fundamental_circuit(&g, &t, "e5").unwrap();
        // e5 joins 1 and 3: path 1-0-2-3
        assert_eq!(c.circuit_edges, vec!["e5", "e1", "e2", "e6"]);
        assert!(fundamental_circuit(&g, &t, "e1").is_err());
    }
}
