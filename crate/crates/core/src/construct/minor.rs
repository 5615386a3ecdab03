use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::patterns::{bits, connected_subsets};
use crate::graph::Multigraph;

/// Desk-scale guard for minor testing.
pub const MAX_MINOR_VERTICES: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinorPattern {
    K4,
    K23,
}

impl MinorPattern {
    /// Pattern adjacency and groups of interchangeable pattern vertices.
    fn shape(self) -> (Vec<u64>, Vec<Vec<usize>>) {
        match self {
            MinorPattern::K4 => (vec![0b1110, 0b1101, 0b1011, 0b0111], vec![vec![0, 1, 2, 3]]),
            MinorPattern::K23 => (
                vec![0b11100, 0b11100, 0b00011, 0b00011, 0b00011],
                vec![vec![0, 1], vec![2, 3, 4]],
            ),
        }
    }
}

impl std::str::FromStr for MinorPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "K4" => Ok(MinorPattern::K4),
            "K23" | "K2,3" => Ok(MinorPattern::K23),
            other => Err(Error::input(format!("unknown minor pattern {other}"))),
        }
    }
}

/// Whether `pattern` is a minor of `h`, by exhaustive search for pairwise
/// disjoint connected branch sets with the required adjacencies.
pub fn has_minor(h: &Multigraph, pattern: MinorPattern) -> Result<bool> {
    let n = h.vertex_count();
    if n > MAX_MINOR_VERTICES {
        return Err(Error::capacity(format!(
            "minor testing is limited to {MAX_MINOR_VERTICES} vertices, got {n}"
        )));
    }
    Ok(find_model(&h.simple_adjacency()?, pattern).is_some())
}

/// Branch sets (vertex bitmasks) of a model of `pattern`, if one exists.
pub(crate) fn find_model(adj: &[u64], pattern: MinorPattern) -> Option<Vec<u64>> {
    let (padj, groups) = pattern.shape();
    let k = padj.len();
    if adj.len() < k {
        return None;
    }
    let mut sets: Vec<u64> = Vec::new();
    for size in 1..=adj.len() + 1 - k {
        let _ = connected_subsets(adj, size, &mut |s| {
            sets.push(s);
            ControlFlow::Continue(())
        });
    }
    let closed: Vec<u64> = sets.iter().map(|&s| bits(s).fold(0, |m, v| m | adj[v])).collect();
    // predecessor within the same symmetry group, whose minimum must be smaller
    let mut prev_in_group = vec![None; k];
    for g in &groups {
        for w in g.windows(2) {
            prev_in_group[w[1]] = Some(w[0]);
        }
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    let mut used = 0u64;
    if search(adj.len(), &sets, &closed, &padj, &prev_in_group, &mut chosen, &mut used) {
        Some(chosen.iter().map(|&c| sets[c]).collect())
    } else {
        None
    }
}

fn search(
    n: usize,
    sets: &[u64],
    closed: &[u64],
    padj: &[u64],
    prev_in_group: &[Option<usize>],
    chosen: &mut Vec<usize>,
    used: &mut u64,
) -> bool {
    let i = chosen.len();
    let k = padj.len();
    if i == k {
        return true;
    }
    let free = n - used.count_ones() as usize;
    if free < k - i {
        return false;
    }
    let min_floor = prev_in_group[i].map(|p| sets[chosen[p]].trailing_zeros());
    for c in 0..sets.len() {
        let s = sets[c];
        if s & *used != 0 || s.count_ones() as usize > free - (k - i - 1) {
            continue;
        }
        if min_floor.is_some_and(|m| s.trailing_zeros() <= m) {
            continue;
        }
        let ok = (0..i).all(|j| padj[i] >> j & 1 == 0 || closed[c] & sets[chosen[j]] != 0);
        if !ok {
            continue;
        }
        chosen.push(c);
        *used |= s;
        if search(n, sets, closed, padj, prev_in_group, chosen, used) {
            return true;
        }
        *used &= !s;
        chosen.pop();
    }
    false
}
