//! Canonical keys for small graphs.
//!
//! Color refinement followed by individualization over the first non-singleton
//! cell; the key is the lexicographically smallest certificate over all leaves
//! of the search tree. Branches on a vertex that is a twin of an already
//! explored vertex of the same cell are skipped: the transposition of the two
//! twins is an automorphism fixing the individualized prefix, so the subtrees
//! coincide.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, LabeledGraph, Multigraph};

/// Desk-scale guard on the number of vertices.
pub const MAX_CANON_VERTICES: usize = 16;

/// Byte string identifying an isomorphism class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Objects with an isomorphism-invariant key.
pub trait CanonicalForm {
    fn canonical_key(&self) -> Result<CanonicalKey>;
}

impl CanonicalForm for BipartiteGraph {
    /// Invariant under class-preserving relabeling and under swapping the classes.
    fn canonical_key(&self) -> Result<CanonicalKey> {
        guard(self.vertex_count())?;
        Ok(bipartite_key_unchecked(self))
    }
}

impl CanonicalForm for Multigraph {
    /// Invariant under vertex relabeling; edge multiplicities are part of the key.
    fn canonical_key(&self) -> Result<CanonicalKey> {
        guard(self.vertex_count())?;
        let n = self.vertex_count();
        let mut key = vec![b'M'];
        key.extend(certificate(n, &vec![0; n], &self.multiplicities()));
        Ok(CanonicalKey(key))
    }
}

impl CanonicalForm for LabeledGraph {
    fn canonical_key(&self) -> Result<CanonicalKey> {
        guard(self.vertex_count())?;
        let n = self.vertex_count();
        let w = masks_to_weights(self.masks());
        let mut key = vec![b'L'];
        key.extend(certificate(n, &vec![0; n], &w));
        Ok(CanonicalKey(key))
    }
}

fn guard(n: usize) -> Result<()> {
    if n > MAX_CANON_VERTICES {
        return Err(Error::capacity(format!(
            "canonical keys are limited to {MAX_CANON_VERTICES} vertices, got {n}"
        )));
    }
    Ok(())
}

fn masks_to_weights(adj: &[u64]) -> Vec<Vec<u32>> {
    let n = adj.len();
    (0..n)
        .map(|x| (0..n).map(|y| (adj[x] >> y & 1) as u32).collect())
        .collect()
}

pub(crate) fn bipartite_key_unchecked(g: &BipartiteGraph) -> CanonicalKey {
    let na = g.class_a().len();
    let nb = g.class_b().len();
    let n = na + nb;
    let mut w = vec![vec![0u32; n]; n];
    for (i, j) in g.edges() {
        w[i][na + j] = 1;
        w[na + j][i] = 1;
    }
    let colors_ab: Vec<u32> = (0..n).map(|v| u32::from(v >= na)).collect();
    let colors_ba: Vec<u32> = colors_ab.iter().map(|c| 1 - c).collect();
    // The class that receives color 0 is fixed by size when sizes differ;
    // otherwise both orientations are tried.
    let cert = match na.cmp(&nb) {
        std::cmp::Ordering::Less => certificate(n, &colors_ab, &w),
        std::cmp::Ordering::Greater => certificate(n, &colors_ba, &w),
        std::cmp::Ordering::Equal => {
            let x = certificate(n, &colors_ab, &w);
            let y = certificate(n, &colors_ba, &w);
            x.min(y)
        }
    };
    let mut key = vec![b'B'];
    key.extend(cert);
    CanonicalKey(key)
}

/// Multigraph key without the vertex guard, for internal memo tables whose
/// inputs are bounded by other guards.
pub(crate) fn weighted_key_unchecked(n: usize, w: &[Vec<u32>]) -> CanonicalKey {
    let mut key = vec![b'M'];
    key.extend(certificate(n, &vec![0; n], w));
    CanonicalKey(key)
}

pub(crate) fn labeled_key_unchecked(adj: &[u64]) -> CanonicalKey {
    let n = adj.len();
    let mut key = vec![b'L'];
    key.extend(certificate(n, &vec![0; n], &masks_to_weights(adj)));
    CanonicalKey(key)
}

/// Canonical certificate of a vertex-colored graph with symmetric
/// nonnegative edge weights (zero meaning no edge, no loops).
pub(crate) fn certificate(n: usize, colors: &[u32], w: &[Vec<u32>]) -> Vec<u8> {
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let cell: Vec<usize> = colors
        .iter()
        .map(|c| distinct.binary_search(c).unwrap())
        .collect();
    let mut search = Search {
        n,
        colors,
        w,
        best: None,
    };
    search.descend(cell);
    search.best.unwrap_or_else(|| encode(n, colors, w, &[]))
}

struct Search<'a> {
    n: usize,
    colors: &'a [u32],
    w: &'a [Vec<u32>],
    best: Option<Vec<u8>>,
}

impl Search<'_> {
    fn refine(&self, mut cell: Vec<usize>) -> Vec<usize> {
        let n = self.n;
        let mut count = distinct_count(&cell);
        loop {
            let sigs: Vec<(usize, Vec<(usize, u32)>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<(usize, u32)> = (0..n)
                        .filter(|&u| u != v && self.w[v][u] > 0)
                        .map(|u| (cell[u], self.w[v][u]))
                        .collect();
                    nb.sort_unstable();
                    (cell[v], nb)
                })
                .collect();
            let mut sorted: Vec<&(usize, Vec<(usize, u32)>)> = sigs.iter().collect();
            sorted.sort();
            sorted.dedup();
            if sorted.len() == count {
                return cell;
            }
            count = sorted.len();
            cell = sigs
                .iter()
                .map(|s| sorted.binary_search(&s).unwrap())
                .collect();
        }
    }

    fn twins(&self, x: usize, y: usize) -> bool {
        (0..self.n).all(|z| z == x || z == y || self.w[x][z] == self.w[y][z])
    }

    fn descend(&mut self, cell: Vec<usize>) {
        let cell = self.refine(cell);
        let k = distinct_count(&cell);
        if k == self.n {
            let cert = encode(self.n, self.colors, self.w, &cell);
            if self.best.as_ref().is_none_or(|b| cert < *b) {
                self.best = Some(cert);
            }
            return;
        }
        let mut sizes = vec![0usize; k];
        for &c in &cell {
            sizes[c] += 1;
        }
        let target = (0..k).find(|&c| sizes[c] > 1).unwrap();
        let members: Vec<usize> = (0..self.n).filter(|&v| cell[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &x in &members {
            if tried.iter().any(|&t| self.twins(t, x)) {
                continue;
            }
            tried.push(x);
            let next: Vec<usize> = (0..self.n)
                .map(|v| {
                    if cell[v] > target || (cell[v] == target && v != x) {
                        cell[v] + 1
                    } else {
                        cell[v]
                    }
                })
                .collect();
            self.descend(next);
        }
    }
}

fn distinct_count(cell: &[usize]) -> usize {
    let mut v = cell.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Certificate of the ordering `position[v]` (empty means identity on an empty graph).
fn encode(n: usize, colors: &[u32], w: &[Vec<u32>], position: &[usize]) -> Vec<u8> {
    let mut order = vec![0usize; n];
    for (v, &p) in position.iter().enumerate() {
        order[p] = v;
    }
    let mut out = Vec::with_capacity(2 + 4 * n + 4 * n * n / 2);
    out.extend((n as u16).to_le_bytes());
    for &v in &order {
        out.extend(colors[v].to_le_bytes());
    }
    for i in 0..n {
        for j in i + 1..n {
            out.extend(w[order[i]][order[j]].to_le_bytes());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn relabeling_and_class_swap_invariance() {
        let c6 = named::cycle(6);
        let relabeled = BipartiteGraph::from_labels(
            &["x", "y", "z"],
            &["p", "q", "r"],
            &[("x", "q"), ("q", "z"), ("z", "p"), ("p", "y"), ("y", "r"), ("r", "x")],
        )
        .unwrap();
        assert_eq!(c6.canonical_key().unwrap(), relabeled.canonical_key().unwrap());
        assert_ne!(c6.canonical_key().unwrap(), named::domino().canonical_key().unwrap());
        let p4 = named::path(4);
        assert_eq!(p4.canonical_key().unwrap(), p4.swap_classes().canonical_key().unwrap());
    }

    #[test]
    fn large_star_is_fast_thanks_to_twin_pruning() {
        let s = named::star(15);
        assert!(s.canonical_key().is_ok());
        assert!(matches!(named::star(16).canonical_key(), Err(Error::Capacity(_))));
    }

    #[test]
    fn multigraph_keys_respect_multiplicity() {
        let a = Multigraph::from_pairs(3, &[(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        let b = Multigraph::from_pairs(3, &[(2, 1), (2, 1), (1, 0), (0, 2)]).unwrap();
        let c = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(a.canonical_key().unwrap(), b.canonical_key().unwrap());
        assert_ne!(a.canonical_key().unwrap(), c.canonical_key().unwrap());
    }
}
