//! Induced-subgraph search for the small patterns used throughout the crate.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::canon::labeled_key_unchecked;
use crate::graph::{named, BipartiteGraph, CanonicalKey};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pattern {
    /// Any induced cycle of length at least 6.
    Hole,
    Domino,
    Arrow,
    T2,
    #[serde(rename = "2k2")]
    TwoK2,
    C6,
}

impl Pattern {
    pub fn name(self) -> &'static str {
        match self {
            Pattern::Hole => "hole",
            Pattern::Domino => "domino",
            Pattern::Arrow => "arrow",
            Pattern::T2 => "T2",
            Pattern::TwoK2 => "2K2",
            Pattern::C6 => "C6",
        }
    }

    fn fixed_graph(self) -> Option<BipartiteGraph> {
        match self {
            Pattern::Domino => Some(named::domino()),
            Pattern::Arrow => Some(named::arrow()),
            Pattern::T2 => Some(named::t2()),
            Pattern::C6 => Some(named::cycle(6)),
            Pattern::Hole | Pattern::TwoK2 => None,
        }
    }
}

impl std::str::FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hole" => Ok(Pattern::Hole),
            "domino" => Ok(Pattern::Domino),
            "arrow" => Ok(Pattern::Arrow),
            "t2" => Ok(Pattern::T2),
            "2k2" => Ok(Pattern::TwoK2),
            "c6" => Ok(Pattern::C6),
            other => Err(Error::input(format!("unknown pattern {other}"))),
        }
    }
}

/// Returns the labels of a vertex set inducing `pattern`, or `None`.
/// Hole witnesses are listed in cycle order.
pub fn find_induced(g: &BipartiteGraph, pattern: Pattern) -> Result<Option<Vec<String>>> {
    let adj = g.simple_adjacency()?;
    let found = match pattern {
        Pattern::Hole => first_chordless_cycle(&adj, 6, usize::MAX),
        Pattern::C6 => first_chordless_cycle(&adj, 6, 6),
        Pattern::TwoK2 => find_two_k2(g),
        _ => {
            let target = pattern.fixed_graph().unwrap();
            let tadj = target.simple_adjacency()?;
            find_connected_pattern(&adj, &tadj)
        }
    };
    Ok(found.map(|vs| vs.into_iter().map(|v| g.label(v).to_string()).collect()))
}

fn find_two_k2(g: &BipartiteGraph) -> Option<Vec<usize>> {
    let na = g.class_a().len();
    let edges = g.edges();
    for (k, &(a1, b1)) in edges.iter().enumerate() {
        for &(a2, b2) in &edges[k + 1..] {
            if a1 != a2 && b1 != b2 && !g.adjacency().get(a1, b2) && !g.adjacency().get(a2, b1) {
                return Some(vec![a1, na + b1, a2, na + b2]);
            }
        }
    }
    None
}

fn find_connected_pattern(adj: &[u64], pattern: &[u64]) -> Option<Vec<usize>> {
    let k = pattern.len();
    let pattern_edges: u32 = pattern.iter().map(|m| m.count_ones()).sum();
    let mut pattern_degrees: Vec<u32> = pattern.iter().map(|m| m.count_ones()).collect();
    pattern_degrees.sort_unstable();
    let pattern_key = labeled_key_unchecked(pattern);
    let mut found = None;
    let _ = connected_subsets(adj, k, &mut |set| {
        let mut degrees: Vec<u32> = bits(set).map(|v| (adj[v] & set).count_ones()).collect();
        if degrees.iter().sum::<u32>() != pattern_edges {
            return ControlFlow::Continue(());
        }
        degrees.sort_unstable();
        if degrees != pattern_degrees {
            return ControlFlow::Continue(());
        }
        if induced_key(adj, set) == pattern_key {
            found = Some(bits(set).collect());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

fn induced_key(adj: &[u64], set: u64) -> CanonicalKey {
    let verts: Vec<usize> = bits(set).collect();
    let sub: Vec<u64> = verts
        .iter()
        .map(|&x| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &y)| adj[x] >> y & 1 == 1)
                .fold(0u64, |m, (j, _)| m | 1 << j)
        })
        .collect();
    labeled_key_unchecked(&sub)
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Visits every connected induced vertex set of size `k` exactly once
/// (ESU enumeration).
pub(crate) fn connected_subsets(
    adj: &[u64],
    k: usize,
    visit: &mut dyn FnMut(u64) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn extend(
        adj: &[u64],
        k: usize,
        root: usize,
        set: u64,
        size: usize,
        mut ext: u64,
        visit: &mut dyn FnMut(u64) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if size == k {
            return visit(set);
        }
        let closed = bits(set).fold(set, |m, v| m | adj[v]);
        let above = if root + 1 >= 64 { 0 } else { !0u64 << (root + 1) };
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let exclusive = adj[w] & !closed & above;
            extend(adj, k, root, set | 1 << w, size + 1, ext | exclusive, visit)?;
        }
        ControlFlow::Continue(())
    }
    if k == 0 {
        return ControlFlow::Continue(());
    }
    for v in 0..adj.len() {
        let above = if v + 1 >= 64 { 0 } else { !0u64 << (v + 1) };
        extend(adj, k, v, 1 << v, 1, adj[v] & above, visit)?;
    }
    ControlFlow::Continue(())
}

/// Visits every chordless cycle with length in `min_len..=max_len` once, as a
/// vertex sequence starting at its smallest vertex.
pub(crate) fn chordless_cycles(
    adj: &[u64],
    min_len: usize,
    max_len: usize,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn dfs(
        adj: &[u64],
        path: &mut Vec<usize>,
        on_path: u64,
        inner: u64,
        min_len: usize,
        max_len: usize,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let s = path[0];
        let last = *path.last().unwrap();
        for y in bits(adj[last]) {
            if y <= s || on_path >> y & 1 == 1 || adj[y] & inner != 0 {
                continue;
            }
            if adj[y] >> s & 1 == 1 {
                let len = path.len() + 1;
                if len >= min_len && len <= max_len && path[1] < y {
                    path.push(y);
                    let r = visit(path);
                    path.pop();
                    r?;
                }
                continue;
            }
            if path.len() + 1 >= max_len {
                continue;
            }
            path.push(y);
            // the previous end becomes interior; the start vertex never is
            let new_inner = inner | 1 << last;
            let r = dfs(adj, path, on_path | 1 << y, new_inner, min_len, max_len, visit);
            path.pop();
            r?;
        }
        ControlFlow::Continue(())
    }
    for s in 0..adj.len() {
        for x in bits(adj[s]) {
            if x <= s {
                continue;
            }
            let mut path = vec![s, x];
            dfs(adj, &mut path, 1 << s | 1 << x, 0, min_len, max_len, visit)?;
        }
    }
    ControlFlow::Continue(())
}

fn first_chordless_cycle(adj: &[u64], min_len: usize, max_len: usize) -> Option<Vec<usize>> {
    let mut found = None;
    let _ = chordless_cycles(adj, min_len, max_len, &mut |c| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Lengths of all chordless cycles of length at least 6.
pub fn hole_lengths(g: &BipartiteGraph) -> Result<Vec<usize>> {
    let adj = g.simple_adjacency()?;
    let mut out = Vec::new();
    let _ = chordless_cycles(&adj, 6, usize::MAX, &mut |c| {
        out.push(c.len());
        ControlFlow::Continue(())
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CanonicalForm;

    fn verify(g: &BipartiteGraph, p: Pattern, witness: &[String]) {
        let sub = g.induced_subgraph(witness).unwrap();
        match p {
            Pattern::Hole => {
                assert!(witness.len() >= 6);
                assert!(sub.is_connected());
                assert!((0..sub.vertex_count()).all(|v| sub.degree(v) == 2));
            }
            Pattern::TwoK2 => {
                assert_eq!(sub.edge_count(), 2);
                assert!((0..4).all(|v| sub.degree(v) == 1));
            }
            _ => assert_eq!(
                sub.canonical_key().unwrap(),
                p.fixed_graph().unwrap().canonical_key().unwrap()
            ),
        }
    }

    #[test]
    fn c8_is_its_own_hole() {
        let c8 = named::cycle(8);
        let w = find_induced(&c8, Pattern::Hole).unwrap().unwrap();
        assert_eq!(w.len(), 8);
        verify(&c8, Pattern::Hole, &w);
        assert!(find_induced(&c8, Pattern::C6).unwrap().is_none());
    }

    #[test]
    fn domino_contains_two_k2_but_no_hole() {
        let d = named::domino();
        let w = find_induced(&d, Pattern::TwoK2).unwrap().unwrap();
        verify(&d, Pattern::TwoK2, &w);
        assert!(find_induced(&d, Pattern::Hole).unwrap().is_none());
        let w = find_induced(&d, Pattern::Domino).unwrap().unwrap();
        verify(&d, Pattern::Domino, &w);
    }

    #[test]
    fn complete_bipartite_has_no_hole() {
        assert!(find_induced(&named::complete(2, 3), Pattern::Hole).unwrap().is_none());
        assert!(find_induced(&named::complete(3, 3), Pattern::TwoK2).unwrap().is_none());
    }

    #[test]
    fn patterns_find_themselves() {
        for p in [Pattern::Domino, Pattern::Arrow, Pattern::T2, Pattern::C6] {
            let g = p.fixed_graph().unwrap();
            let w = find_induced(&g, p).unwrap().unwrap();
            verify(&g, p, &w);
        }
        assert!(find_induced(&named::arrow(), Pattern::T2).unwrap().is_none());
        assert!(find_induced(&named::t2(), Pattern::Arrow).unwrap().is_none());
    }

    #[test]
    fn hole_lengths_of_theta_graph() {
        // x-y paths of lengths 3, 3 and 5
        let g = BipartiteGraph::from_labels(
            &["x", "a1", "a2", "a3", "a4"],
            &["y", "b1", "b2", "b3", "b4"],
            &[
                ("x", "b1"), ("b1", "a1"), ("a1", "y"),
                ("x", "b2"), ("b2", "a2"), ("a2", "y"),
                ("x", "b3"), ("b3", "a3"), ("a3", "b4"), ("b4", "a4"), ("a4", "y"),
            ],
        )
        .unwrap();
        let mut lens = hole_lengths(&g).unwrap();
        lens.sort();
        assert_eq!(lens, vec![6, 8, 8]);
    }
}
