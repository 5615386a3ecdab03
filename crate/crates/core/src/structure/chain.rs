use serde::Serialize;

use crate::construct::{bdh_check_forbidden, ForbiddenCheck};
use crate::error::{Error, Result};
use crate::graph::{find_induced, hole_lengths, BipartiteGraph, CanonicalKey, Pattern};
use crate::pivot::{orbit, pivot};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bisimplicial {
    pub bisimplicial: bool,
    /// bisimplicial and neither end is a pending vertex
    pub proper: bool,
}

/// Whether `N(u) ∪ N(v)` induces a complete bipartite graph.
pub fn is_bisimplicial(g: &BipartiteGraph, u: &str, v: &str) -> Result<Bisimplicial> {
    let x = g.require(u)?;
    let y = g.require(v)?;
    if !g.has_edge(x, y) {
        return Err(Error::precondition(format!("{u}{v} is not an edge")));
    }
    let nx = g.neighbors(x);
    let ny = g.neighbors(y);
    let bisimplicial = nx.iter().all(|&p| ny.iter().all(|&q| g.has_edge(p, q)));
    let proper = bisimplicial && g.degree(x) > 1 && g.degree(y) > 1;
    Ok(Bisimplicial { bisimplicial, proper })
}

/// No induced `2K2`.
pub fn is_chain_graph(g: &BipartiteGraph) -> Result<bool> {
    Ok(find_induced(g, Pattern::TwoK2)?.is_none())
}

/// A chain graph in the orbit together with the pivot word reaching it.
#[derive(Debug, Clone, Serialize)]
pub struct ChainSearch {
    pub chain: BipartiteGraph,
    pub word: Vec<(String, String)>,
}

/// Breadth-first search of the pivot orbit for a `2K2`-free member. The
/// returned word, applied to `g` pivot by pivot, yields `chain` exactly.
pub fn chain_graph_orbit_search(g: &BipartiteGraph, cap: usize) -> Result<Option<ChainSearch>> {
    let orb = orbit(g, cap)?;
    let keys: Vec<CanonicalKey> = orb.keys().cloned().collect();
    for (key, member) in keys.iter().zip(orb.members()) {
        if !is_chain_graph(member)? {
            continue;
        }
        let word = orb.path_to(key).ok_or_else(|| Error::internal("orbit member is unreachable"))?;
        let mut h = g.clone();
        for (u, v) in &word {
            h = pivot(&h, u, v)?;
        }
        if !h.same_labeled_graph(member) {
            return Err(Error::internal("pivot word does not replay to the orbit member"));
        }
        return Ok(Some(ChainSearch { chain: h, word }));
    }
    Ok(None)
}

/// Free of holes, dominoes, arrows and `T2`.
pub fn forbidden_quadruple_check(g: &BipartiteGraph) -> Result<ForbiddenCheck> {
    let first = bdh_check_forbidden(g)?;
    if !first.free {
        return Ok(first);
    }
    for p in [Pattern::Arrow, Pattern::T2] {
        if let Some(w) = find_induced(g, p)? {
            return Ok(ForbiddenCheck { free: false, pattern: Some(p), witness: Some(w) });
        }
    }
    Ok(first)
}

/// Every hole has length divisible by 4.
pub fn balancedness_check(g: &BipartiteGraph) -> Result<bool> {
    Ok(hole_lengths(g)?.iter().all(|l| l % 4 == 0))
}
