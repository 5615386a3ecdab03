use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::construct::bdh_check_forbidden;
use crate::error::{Error, Result};
use crate::fundamental::{bdh_to_sp, BinaryMatroid};
use crate::gf2::rank_u64;
use crate::graph::canon::bipartite_key_unchecked;
use crate::graph::{BipartiteGraph, CanonicalKey, LabeledGraph};
use crate::pivot::pivot_at;

use super::tutte::{tutte_graph, tutte_matroid};
use super::Polynomial1V;

pub const MAX_INTERLACE_VERTICES: usize = 12;

fn guard(n: usize) -> Result<()> {
    if n > MAX_INTERLACE_VERTICES {
        return Err(Error::capacity(format!(
            "interlace polynomials are limited to {MAX_INTERLACE_VERTICES} vertices, got {n}"
        )));
    }
    Ok(())
}

/// Vertex-nullity interlace polynomial of a bipartite graph by the edge
/// recursion `q(G) = q(G - u) + q(G^{uv} - u)` with `q` of `n` isolated
/// vertices equal to `x^n`.
pub fn interlace(g: &BipartiteGraph) -> Result<Polynomial1V> {
    guard(g.vertex_count())?;
    let mut memo = HashMap::new();
    Ok(recurse(g, &mut memo))
}

fn recurse(g: &BipartiteGraph, memo: &mut HashMap<CanonicalKey, Polynomial1V>) -> Polynomial1V {
    let isolated: Vec<String> = (0..g.vertex_count())
        .filter(|&v| g.degree(v) == 0)
        .map(|v| g.label(v).to_string())
        .collect();
    if !isolated.is_empty() {
        let rest = g.remove_vertices(&isolated).expect("labels come from the graph");
        return recurse(&rest, memo).shift(isolated.len());
    }
    if g.vertex_count() == 0 {
        return Polynomial1V::one();
    }
    let key = bipartite_key_unchecked(g);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (i, j) = g.edges()[0];
    let u = g.class_a()[i].clone();
    let without_u = g.remove_vertices(&[&u]).expect("u is a vertex");
    let pivoted = pivot_at(g, i, j).remove_vertices(&[&u]).expect("u is a vertex");
    let p = &recurse(&without_u, memo) + &recurse(&pivoted, memo);
    memo.insert(key, p.clone());
    p
}

/// `sum over S of (x - 1)^nullity(A[S])`, the nullity taken over GF(2).
/// Defined for every simple graph.
pub fn interlace_nullity(g: &LabeledGraph) -> Result<Polynomial1V> {
    let n = g.vertex_count();
    guard(n)?;
    let masks = g.masks();
    let mut counts = vec![0u64; n + 1];
    let mut rows = Vec::with_capacity(n);
    for s in 0u64..1 << n {
        rows.clear();
        let mut m = s;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            rows.push(masks[v] & s);
        }
        counts[rows.len() - rank_u64(&rows)] += 1;
    }
    let mut out = Polynomial1V::zero();
    for (k, &c) in counts.iter().enumerate() {
        if c > 0 {
            out = &out + &(&Polynomial1V::x_minus_one_pow(k) * &Polynomial1V::from_coeffs(vec![BigInt::from(c)]));
        }
    }
    Ok(out)
}

/// Interlace polynomial of any simple graph: the recursion when it is
/// bipartite, the nullity expansion otherwise.
pub fn interlace_graph(g: &LabeledGraph) -> Result<Polynomial1V> {
    match BipartiteGraph::from_labeled(g) {
        Some(b) => interlace(&b),
        None => interlace_nullity(g),
    }
}

/// Linear coefficient of the interlace polynomial.
pub fn gamma(g: &BipartiteGraph) -> Result<BigInt> {
    Ok(interlace(g)?.coeff(1))
}

/// The interlace polynomial next to the diagonal Tutte polynomials of the
/// matroid generated by the graph and, for BDH graphs, of its SP realization.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub interlace: Polynomial1V,
    pub matroid_diagonal: Polynomial1V,
    pub graph_diagonal: Option<Polynomial1V>,
    pub matroid_identity: bool,
    pub graph_identity: Option<bool>,
    /// Why no SP realization exists, when it does not.
    pub note: Option<String>,
}

pub fn verify_identity(g: &BipartiteGraph) -> Result<IdentityReport> {
    let q = interlace(g)?;
    let tm = tutte_matroid(&BinaryMatroid::from_bipartite(g)?)?.diagonal();
    let (graph_diagonal, note) = if !g.is_connected() {
        (None, Some("graph is disconnected".to_string()))
    } else {
        match bdh_to_sp(g) {
            Ok((h, _)) => (Some(tutte_graph(&h)?.diagonal()), None),
            Err(Error::Domain { message, .. }) => (None, Some(message)),
            Err(_) if g.vertex_count() < 2 => (None, Some("too small for an SP realization".to_string())),
            Err(e) => return Err(e),
        }
    };
    debug_assert!(graph_diagonal.is_none() || bdh_check_forbidden(g).map(|c| c.free).unwrap_or(false));
    Ok(IdentityReport {
        matroid_identity: q == tm,
        graph_identity: graph_diagonal.as_ref().map(|t| *t == q),
        interlace: q,
        matroid_diagonal: tm,
        graph_diagonal,
        note,
    })
}
