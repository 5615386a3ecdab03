use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An edge with an explicit identity, so that parallel edges stay distinguishable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub id: String,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(id: impl Into<String>, u: usize, v: usize) -> Self {
        Edge { id: id.into(), u, v }
    }

    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Loopless multigraph on vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MultigraphJson", into = "MultigraphJson")]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    index: HashMap<String, usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultigraphJson {
    pub n: usize,
    pub edges: Vec<Edge>,
}

impl TryFrom<MultigraphJson> for Multigraph {
    type Error = Error;

    fn try_from(j: MultigraphJson) -> Result<Self> {
        Multigraph::new(j.n, j.edges)
    }
}

impl From<Multigraph> for MultigraphJson {
    fn from(g: Multigraph) -> Self {
        MultigraphJson {
            n: g.vertex_count,
            edges: g.edges,
        }
    }
}

impl std::fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Multigraph(n={}; ", self.vertex_count)?;
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}-{}", e.id, e.u, e.v)?;
        }
        write!(f, ")")
    }
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut index = HashMap::with_capacity(edges.len());
        for (k, e) in edges.iter().enumerate() {
            if e.u >= vertex_count || e.v >= vertex_count {
                return Err(Error::input(format!(
                    "edge {} has an endpoint outside 0..{vertex_count}",
                    e.id
                )));
            }
            if e.u == e.v {
                return Err(Error::input(format!("edge {} is a loop", e.id)));
            }
            if index.insert(e.id.clone(), k).is_some() {
                return Err(Error::input(format!("duplicate edge id {}", e.id)));
            }
        }
        Ok(Multigraph {
            vertex_count,
            edges,
            index,
        })
    }

    /// Builds a graph from endpoint pairs, naming edges `e1, e2, ...`.
    pub fn from_pairs(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| Edge::new(format!("e{}", k + 1), u, v))
            .collect();
        Self::new(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, k: usize) -> &Edge {
        &self.edges[k]
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn edge_ids(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.id.clone()).collect()
    }

    pub fn degree(&self, x: usize) -> usize {
        self.edges.iter().filter(|e| e.u == x || e.v == x).count()
    }

    /// `(neighbor, edge index)` pairs of every edge at `x`.
    pub fn incident(&self, x: usize) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.u == x || e.v == x)
            .map(|(k, e)| (e.other(x), k))
            .collect()
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (k, e) in self.edges.iter().enumerate() {
            adj[e.u].push((e.v, k));
            adj[e.v].push((e.u, k));
        }
        adj
    }

    /// Edge multiplicities between every vertex pair.
    pub fn multiplicities(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count;
        let mut w = vec![vec![0u32; n]; n];
        for e in &self.edges {
            w[e.u][e.v] += 1;
            w[e.v][e.u] += 1;
        }
        w
    }

    /// Underlying simple graph as neighbor bitmasks. Requires at most 64 vertices.
    pub fn simple_adjacency(&self) -> Result<Vec<u64>> {
        if self.vertex_count > 64 {
            return Err(Error::capacity("simple adjacency supports at most 64 vertices"));
        }
        let mut adj = vec![0u64; self.vertex_count];
        for e in &self.edges {
            adj[e.u] |= 1 << e.v;
            adj[e.v] |= 1 << e.u;
        }
        Ok(adj)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(None)
    }

    fn is_connected_without(&self, removed: Option<usize>) -> bool {
        let n = self.vertex_count;
        let start = (0..n).find(|&x| Some(x) != removed);
        let Some(start) = start else {
            return true;
        };
        let adj = self.adjacency_lists();
        let mut seen = vec![false; n];
        if let Some(r) = removed {
            seen[r] = true;
        }
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &(y, _) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Connected, without cut vertices, with at least two edges. Two vertices
    /// joined by at least two parallel edges count as 2-connected.
    pub fn is_two_connected(&self) -> bool {
        if self.edges.len() < 2 || self.vertex_count < 2 || !self.is_connected() {
            return false;
        }
        if self.vertex_count == 2 {
            return true;
        }
        (0..self.vertex_count).all(|x| self.is_connected_without(Some(x)))
    }

    /// Edge indices whose removal disconnects the graph.
    pub fn bridges(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&k| {
                let rest: Vec<Edge> = self
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, e)| e.clone())
                    .collect();
                let g = Multigraph {
                    vertex_count: self.vertex_count,
                    index: HashMap::new(),
                    edges: rest,
                };
                !g.is_connected()
            })
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.vertex_count {
            s.push_str(&format!("  {v};\n"));
        }
        for e in &self.edges {
            s.push_str(&format!("  {} -- {} [label=\"{}\"];\n", e.u, e.v, e.id));
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicate_ids() {
        assert!(Multigraph::from_pairs(2, &[(0, 0)]).is_err());
        assert!(Multigraph::new(2, vec![Edge::new("a", 0, 1), Edge::new("a", 0, 1)]).is_err());
        assert!(Multigraph::from_pairs(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn two_connectivity() {
        let digon = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(digon.is_two_connected());
        let k2 = Multigraph::from_pairs(2, &[(0, 1)]).unwrap();
        assert!(!k2.is_two_connected());
        let bowtie =
            Multigraph::from_pairs(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert!(bowtie.is_connected());
        assert!(!bowtie.is_two_connected());
        let c4 = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.is_two_connected());
        assert!(c4.bridges().is_empty());
        let p3 = Multigraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.bridges(), vec![0, 1]);
    }

    #[test]
    fn json_shape() {
        let g: Multigraph =
            serde_json::from_str(r#"{"n": 2, "edges": [{"id": "e1", "u": 0, "v": 1}]}"#).unwrap();
        assert_eq!(g.edge_count(), 1);
        let back = serde_json::to_value(&g).unwrap();
        assert_eq!(back["n"], 2);
        assert_eq!(back["edges"][0]["id"], "e1");
        assert!(serde_json::from_str::<Multigraph>(r#"{"n": 1, "edges": [{"id": "e1", "u": 0, "v": 0}]}"#).is_err());
    }
}
