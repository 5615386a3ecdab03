use std::collections::HashMap;

use crate::error::{Error, Result};

/// Simple undirected graph on at most 64 labeled vertices, stored as
/// neighbor bitmasks. Carrier for interlacement graphs and for graphs that
/// are not necessarily bipartite.
#[derive(Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl std::fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LabeledGraph({:?}; ", self.labels)?;
        for (x, y) in self.edges() {
            write!(f, "{}{} ", self.labels[x], self.labels[y])?;
        }
        write!(f, ")")
    }
}

impl LabeledGraph {
    pub fn from_masks(labels: Vec<String>, adj: Vec<u64>) -> Result<Self> {
        let n = labels.len();
        if n > 64 {
            return Err(Error::capacity("labeled graphs hold at most 64 vertices"));
        }
        if adj.len() != n {
            return Err(Error::input("adjacency length differs from label count"));
        }
        let mut seen = HashMap::new();
        for (k, l) in labels.iter().enumerate() {
            if seen.insert(l.as_str(), k).is_some() {
                return Err(Error::input(format!("duplicate vertex label {l}")));
            }
        }
        let valid = if n == 64 { !0 } else { (1u64 << n) - 1 };
        for x in 0..n {
            if adj[x] & !valid != 0 || adj[x] >> x & 1 == 1 {
                return Err(Error::input("adjacency mask out of range or has a loop"));
            }
            for y in 0..n {
                if (adj[x] >> y & 1) != (adj[y] >> x & 1) {
                    return Err(Error::input("adjacency is not symmetric"));
                }
            }
        }
        Ok(LabeledGraph { labels, adj })
    }

    pub fn from_edges(labels: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let n = labels.len();
        let mut adj = vec![0u64; n];
        for (x, y) in edges {
            let i = labels.iter().position(|l| l == x);
            let j = labels.iter().position(|l| l == y);
            let (Some(i), Some(j)) = (i, j) else {
                return Err(Error::input(format!("unknown endpoint in edge {x}{y}")));
            };
            if i != j {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        Self::from_masks(labels.iter().map(|s| s.to_string()).collect(), adj)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn masks(&self) -> &[u64] {
        &self.adj
    }

    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        self.adj[x] >> y & 1 == 1
    }

    pub fn neighbors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        let m = self.adj[x];
        (0..self.labels.len()).filter(move |&y| m >> y & 1 == 1)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.labels.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                if self.adjacent(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Edges as label pairs, each pair sorted and the list sorted. Two labeled
    /// graphs on the same labels are equal iff these lists are equal.
    pub fn labeled_edge_set(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = self
            .edges()
            .into_iter()
            .map(|(x, y)| {
                let (a, b) = (self.labels[x].clone(), self.labels[y].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        out.sort();
        out
    }

    /// Subgraph induced by the vertices whose bit is set in `keep`.
    pub fn induced(&self, keep: u64) -> LabeledGraph {
        let verts: Vec<usize> = (0..self.labels.len()).filter(|&v| keep >> v & 1 == 1).collect();
        let mut adj = vec![0u64; verts.len()];
        for (i, &x) in verts.iter().enumerate() {
            for (j, &y) in verts.iter().enumerate() {
                if self.adjacent(x, y) {
                    adj[i] |= 1 << j;
                }
            }
        }
        LabeledGraph {
            labels: verts.iter().map(|&v| self.labels[v].clone()).collect(),
            adj,
        }
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for l in &self.labels {
            s.push_str(&format!("  \"{l}\";\n"));
        }
        for (x, y) in self.edges() {
            s.push_str(&format!("  \"{}\" -- \"{}\";\n", self.labels[x], self.labels[y]));
        }
        s.push_str("}\n");
        s
    }
}
