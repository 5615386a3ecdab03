use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::graph::LabeledGraph;

/// One of the two color classes of a bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Two-colored labeled graph stored through its reduced adjacency matrix:
/// rows are indexed by class A, columns by class B.
///
/// Vertices also have a global index: class A occupies `0..|A|` and class B
/// follows at `|A|..|A|+|B|`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BipartiteJson", into = "BipartiteJson")]
pub struct BipartiteGraph {
    pub(crate) class_a: Vec<String>,
    pub(crate) class_b: Vec<String>,
    pub(crate) adjacency: Gf2Matrix,
    pub(crate) index: HashMap<String, usize>,
}

/// `{"a": [...], "b": [...], "edges": [[i, j], ...]}`, `i` indexing class a and `j` class b.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BipartiteJson {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<BipartiteJson> for BipartiteGraph {
    type Error = Error;

    fn try_from(j: BipartiteJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        BipartiteGraph::new(j.a, j.b, &edges)
    }
}

impl From<BipartiteGraph> for BipartiteJson {
    fn from(g: BipartiteGraph) -> Self {
        let edges = g.edges().into_iter().map(|(i, j)| [i, j]).collect();
        BipartiteJson {
            a: g.class_a,
            b: g.class_b,
            edges,
        }
    }
}

impl std::fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Bipartite(A={:?}, B={:?}; ", self.class_a, self.class_b)?;
        let edges = self.edge_labels();
        for (k, (x, y)) in edges.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}{y}")?;
        }
        write!(f, ")")
    }
}

fn build_index(class_a: &[String], class_b: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(class_a.len() + class_b.len());
    for (k, l) in class_a.iter().chain(class_b.iter()).enumerate() {
        if index.insert(l.clone(), k).is_some() {
            return Err(Error::input(format!("duplicate vertex label {l}")));
        }
    }
    Ok(index)
}

impl BipartiteGraph {
    pub fn new(class_a: Vec<String>, class_b: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut m = Gf2Matrix::zeros(class_a.len(), class_b.len());
        for &(i, j) in edges {
            if i >= class_a.len() || j >= class_b.len() {
                return Err(Error::input(format!("edge ({i},{j}) out of range")));
            }
            m.set(i, j, true);
        }
        Self::from_matrix(class_a, class_b, m)
    }

    pub fn from_matrix(class_a: Vec<String>, class_b: Vec<String>, adjacency: Gf2Matrix) -> Result<Self> {
        if adjacency.rows() != class_a.len() || adjacency.cols() != class_b.len() {
            return Err(Error::input(format!(
                "adjacency is {}x{} but classes have sizes {} and {}",
                adjacency.rows(),
                adjacency.cols(),
                class_a.len(),
                class_b.len()
            )));
        }
        let index = build_index(&class_a, &class_b)?;
        Ok(BipartiteGraph {
            class_a,
            class_b,
            adjacency,
            index,
        })
    }

    /// Graph with generated labels `a0.., b0..`.
    pub fn from_edges(na: usize, nb: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let a = (0..na).map(|i| format!("a{i}")).collect();
        let b = (0..nb).map(|j| format!("b{j}")).collect();
        Self::new(a, b, edges)
    }

    /// Labels from string slices, convenient for fixtures.
    pub fn from_labels(a: &[&str], b: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let ca: Vec<String> = a.iter().map(|s| s.to_string()).collect();
        let cb: Vec<String> = b.iter().map(|s| s.to_string()).collect();
        let mut pairs = Vec::with_capacity(edges.len());
        for (x, y) in edges {
            let i = a.iter().position(|l| l == x);
            let j = b.iter().position(|l| l == y);
            match (i, j) {
                (Some(i), Some(j)) => pairs.push((i, j)),
                _ => match (a.iter().position(|l| l == y), b.iter().position(|l| l == x)) {
                    (Some(i), Some(j)) => pairs.push((i, j)),
                    _ => return Err(Error::input(format!("edge {x}{y} does not join the two classes"))),
                },
            }
        }
        Self::new(ca, cb, &pairs)
    }

    pub fn class_a(&self) -> &[String] {
        &self.class_a
    }

    pub fn class_b(&self) -> &[String] {
        &self.class_b
    }

    pub fn class(&self, side: Side) -> &[String] {
        match side {
            Side::A => &self.class_a,
            Side::B => &self.class_b,
        }
    }

    pub fn adjacency(&self) -> &Gf2Matrix {
        &self.adjacency
    }

    pub fn vertex_count(&self) -> usize {
        self.class_a.len() + self.class_b.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.count_ones()
    }

    pub fn label(&self, v: usize) -> &str {
        let na = self.class_a.len();
        if v < na {
            &self.class_a[v]
        } else {
            &self.class_b[v - na]
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = &String> {
        self.class_a.iter().chain(self.class_b.iter())
    }

    pub fn side(&self, v: usize) -> Side {
        if v < self.class_a.len() {
            Side::A
        } else {
            Side::B
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub(crate) fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::input(format!("unknown vertex label {label}")))
    }

    /// Side and position within its class.
    pub fn locate(&self, v: usize) -> (Side, usize) {
        let na = self.class_a.len();
        if v < na {
            (Side::A, v)
        } else {
            (Side::B, v - na)
        }
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        match (self.locate(x), self.locate(y)) {
            ((Side::A, i), (Side::B, j)) | ((Side::B, j), (Side::A, i)) => self.adjacency.get(i, j),
            _ => false,
        }
    }

    pub fn has_edge_labels(&self, x: &str, y: &str) -> bool {
        match (self.index_of(x), self.index_of(y)) {
            (Some(x), Some(y)) => self.has_edge(x, y),
            _ => false,
        }
    }

    /// Neighbors as global indices, in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let na = self.class_a.len();
        match self.locate(v) {
            (Side::A, i) => self.adjacency.row_ones(i).map(|j| na + j).collect(),
            (Side::B, j) => self.adjacency.col_ones(j).collect(),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        match self.locate(v) {
            (Side::A, i) => self.adjacency.row_weight(i),
            (Side::B, j) => self.adjacency.col_ones(j).count(),
        }
    }

    /// Edges as `(row, column)` pairs of the reduced adjacency matrix.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.class_a.len() {
            for j in self.adjacency.row_ones(i) {
                out.push((i, j));
            }
        }
        out
    }

    /// Edges as `(class-A label, class-B label)`.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| (self.class_a[i].clone(), self.class_b[j].clone()))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    /// Subgraph induced by the given labels. Class membership and the
    /// original label order are preserved.
    pub fn induced_subgraph<S: AsRef<str>>(&self, labels: &[S]) -> Result<BipartiteGraph> {
        let mut keep = vec![false; self.vertex_count()];
        for l in labels {
            keep[self.require(l.as_ref())?] = true;
        }
        self.induced_by_mask(&keep)
    }

    pub(crate) fn induced_by_mask(&self, keep: &[bool]) -> Result<BipartiteGraph> {
        let na = self.class_a.len();
        let rows: Vec<usize> = (0..na).filter(|&i| keep[i]).collect();
        let cols: Vec<usize> = (0..self.class_b.len()).filter(|&j| keep[na + j]).collect();
        let a = rows.iter().map(|&i| self.class_a[i].clone()).collect();
        let b = cols.iter().map(|&j| self.class_b[j].clone()).collect();
        BipartiteGraph::from_matrix(a, b, self.adjacency.select(&rows, &cols))
    }

    pub fn remove_vertices<S: AsRef<str>>(&self, labels: &[S]) -> Result<BipartiteGraph> {
        let mut keep = vec![true; self.vertex_count()];
        for l in labels {
            keep[self.require(l.as_ref())?] = false;
        }
        self.induced_by_mask(&keep)
    }

    /// Equal as labeled two-colored graphs, ignoring the order in which
    /// labels are listed within each class.
    pub fn same_labeled_graph(&self, other: &BipartiteGraph) -> bool {
        let sorted = |v: &[String]| {
            let mut v = v.to_vec();
            v.sort();
            v
        };
        let edges = |g: &BipartiteGraph| {
            let mut e = g.edge_labels();
            e.sort();
            e
        };
        sorted(&self.class_a) == sorted(&other.class_a)
            && sorted(&self.class_b) == sorted(&other.class_b)
            && edges(self) == edges(other)
    }

    /// The same graph with the roles of the two classes exchanged.
    pub fn swap_classes(&self) -> BipartiteGraph {
        BipartiteGraph::from_matrix(
            self.class_b.clone(),
            self.class_a.clone(),
            self.adjacency.transpose(),
        )
        .expect("transpose keeps dimensions consistent")
    }

    /// Neighbor bitmasks over global indices. At most 64 vertices.
    pub fn simple_adjacency(&self) -> Result<Vec<u64>> {
        let n = self.vertex_count();
        if n > 64 {
            return Err(Error::capacity("bitmask view supports at most 64 vertices"));
        }
        let na = self.class_a.len();
        let mut adj = vec![0u64; n];
        for (i, j) in self.edges() {
            adj[i] |= 1 << (na + j);
            adj[na + j] |= 1 << i;
        }
        Ok(adj)
    }

    pub fn to_labeled(&self) -> Result<LabeledGraph> {
        LabeledGraph::from_masks(self.labels().cloned().collect(), self.simple_adjacency()?)
    }

    /// Two-colors a labeled graph, putting the first vertex of every
    /// component in class A. Returns `None` when the graph has an odd cycle.
    pub fn from_labeled(g: &LabeledGraph) -> Option<BipartiteGraph> {
        let n = g.vertex_count();
        let mut color: Vec<Option<Side>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(Side::A);
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                let cx = color[x].unwrap();
                for y in g.neighbors(x) {
                    match color[y] {
                        None => {
                            color[y] = Some(cx.other());
                            stack.push(y);
                        }
                        Some(c) if c == cx => return None,
                        _ => {}
                    }
                }
            }
        }
        let a: Vec<usize> = (0..n).filter(|&v| color[v] == Some(Side::A)).collect();
        let b: Vec<usize> = (0..n).filter(|&v| color[v] == Some(Side::B)).collect();
        let mut m = Gf2Matrix::zeros(a.len(), b.len());
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                if g.adjacent(x, y) {
                    m.set(i, j, true);
                }
            }
        }
        BipartiteGraph::from_matrix(
            a.iter().map(|&v| g.label(v).to_string()).collect(),
            b.iter().map(|&v| g.label(v).to_string()).collect(),
            m,
        )
        .ok()
    }

    /// Class-A vertices drawn as boxes, class-B vertices as ellipses.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for l in &self.class_a {
            s.push_str(&format!("  \"{l}\" [shape=box];\n"));
        }
        for l in &self.class_b {
            s.push_str(&format!("  \"{l}\" [shape=ellipse];\n"));
        }
        for (x, y) in self.edge_labels() {
            s.push_str(&format!("  \"{x}\" -- \"{y}\";\n"));
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn induced_subgraph_keeps_classes_and_order() {
        let c6 = named::cycle(6);
        let p5 = c6.induced_subgraph(&["a1", "a2", "b0", "b1", "b2"]).unwrap();
        assert_eq!(p5.class_a(), &["a1".to_string(), "a2".to_string()]);
        assert_eq!(p5.edge_count(), 4);
        assert!(p5.is_connected());
        let all: Vec<String> = c6.labels().cloned().collect();
        assert_eq!(c6.induced_subgraph(&all).unwrap(), c6);
        assert!(matches!(c6.induced_subgraph(&["zz"]), Err(Error::Input(_))));
    }

    #[test]
    fn json_round_trip_preserves_graph() {
        let g = named::domino();
        let s = serde_json::to_string(&g).unwrap();
        let back: BipartiteGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        let bad = r#"{"a": ["x"], "b": ["x"], "edges": []}"#;
        assert!(serde_json::from_str::<BipartiteGraph>(bad).is_err());
    }

    #[test]
    fn two_coloring_of_labeled_graphs() {
        let p = LabeledGraph::from_edges(&["x", "y", "z"], &[("x", "y"), ("y", "z")]).unwrap();
        let b = BipartiteGraph::from_labeled(&p).unwrap();
        assert_eq!(b.class_a().len(), 2);
        let t = LabeledGraph::from_edges(&["x", "y", "z"], &[("x", "y"), ("y", "z"), ("x", "z")]).unwrap();
        assert!(BipartiteGraph::from_labeled(&t).is_none());
    }

    #[test]
    fn dot_marks_classes() {
        let dot = named::path(2).to_dot();
        assert!(dot.contains("[shape=box]") && dot.contains("[shape=ellipse]"));
    }
}
