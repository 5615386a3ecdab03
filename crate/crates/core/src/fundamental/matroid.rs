use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{rank_of_rows, Gf2Matrix, Gf2MatrixJson};
use crate::graph::{BipartiteGraph, Multigraph};

/// Binary matroid on labeled columns of a GF(2) matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryMatroid {
    labels: Vec<String>,
    #[serde(with = "matrix_json")]
    matrix: Gf2Matrix,
}

mod matrix_json {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &Gf2Matrix, s: S) -> std::result::Result<S::Ok, S::Error> {
        Gf2MatrixJson::from(m).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Gf2Matrix, D::Error> {
        let j = Gf2MatrixJson::deserialize(d)?;
        Gf2Matrix::try_from(j).map_err(serde::de::Error::custom)
    }
}

/// A matroid in standard form `[I | A]`: rows of `A` are indexed by a basis,
/// columns by its complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    pub basis: Vec<String>,
    pub nonbasis: Vec<String>,
    pub a: Gf2Matrix,
}

impl BinaryMatroid {
    pub fn new(labels: Vec<String>, matrix: Gf2Matrix) -> Result<Self> {
        if labels.len() != matrix.cols() {
            return Err(Error::input("one label per column is required"));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(Error::input("duplicate ground set labels"));
        }
        Ok(BinaryMatroid { labels, matrix })
    }

    /// `M[I | A]` with ground set `rows ++ cols`.
    pub fn from_partial(rows: Vec<String>, cols: Vec<String>, a: &Gf2Matrix) -> Result<Self> {
        if a.rows() != rows.len() || a.cols() != cols.len() {
            return Err(Error::input("partial representation does not match its labels"));
        }
        let full = Gf2Matrix::identity(rows.len()).hconcat(a)?;
        let mut labels = rows;
        labels.extend(cols);
        Self::new(labels, full)
    }

    /// `M^G`: the matroid whose partial representation is the reduced
    /// adjacency matrix of `g`.
    pub fn from_bipartite(g: &BipartiteGraph) -> Result<Self> {
        Self::from_partial(g.class_a().to_vec(), g.class_b().to_vec(), g.adjacency())
    }

    /// Cycle matroid via the vertex-edge incidence matrix over GF(2).
    pub fn cycle_matroid(h: &Multigraph) -> Result<Self> {
        let mut m = Gf2Matrix::zeros(h.vertex_count(), h.edge_count());
        for (k, e) in h.edges().iter().enumerate() {
            m.set(e.u, k, true);
            m.set(e.v, k, true);
        }
        Self::new(h.edge_ids(), m)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Column vectors packed as rows of the transpose.
    pub(crate) fn columns(&self) -> Vec<Vec<u64>> {
        let t = self.matrix.transpose();
        (0..t.rows()).map(|c| t.row_words(c).to_vec()).collect()
    }

    pub fn rank_of_indices(&self, subset: &[usize]) -> usize {
        let cols = self.columns();
        let mut rows: Vec<Vec<u64>> = subset.iter().map(|&k| cols[k].clone()).collect();
        rank_of_rows(&mut rows, self.matrix.rows())
    }

    pub fn rank<S: AsRef<str>>(&self, subset: &[S]) -> Result<usize> {
        let idx = subset
            .iter()
            .map(|l| {
                self.labels
                    .iter()
                    .position(|x| x == l.as_ref())
                    .ok_or_else(|| Error::input(format!("unknown ground set element {}", l.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.rank_of_indices(&idx))
    }

    pub fn full_rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Row-reduces to `[I | A]` on the lexicographically first basis.
    pub fn standard_form(&self) -> StandardForm {
        let mut m = self.matrix.clone();
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for c in 0..m.cols() {
            if row == m.rows() {
                break;
            }
            let Some(r) = (row..m.rows()).find(|&r| m.get(r, c)) else { continue };
            if r != row {
                for k in 0..m.cols() {
                    let (x, y) = (m.get(r, k), m.get(row, k));
                    m.set(r, k, y);
                    m.set(row, k, x);
                }
            }
            for r2 in 0..m.rows() {
                if r2 != row && m.get(r2, c) {
                    for k in 0..m.cols() {
                        if m.get(row, k) {
                            m.flip(r2, k);
                        }
                    }
                }
            }
            pivots.push(c);
            row += 1;
        }
        let nonbasis: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
        let rows: Vec<usize> = (0..pivots.len()).collect();
        StandardForm {
            basis: pivots.iter().map(|&c| self.labels[c].clone()).collect(),
            nonbasis: nonbasis.iter().map(|&c| self.labels[c].clone()).collect(),
            a: m.select(&rows, &nonbasis),
        }
    }

    /// `M* = M[I | A^t]` where `M = M[I | A]`; the former non-basis becomes the basis.
    pub fn dual(&self) -> BinaryMatroid {
        let sf = self.standard_form();
        BinaryMatroid::from_partial(sf.nonbasis, sf.basis, &sf.a.transpose())
            .expect("a standard form has consistent shapes")
    }
}
