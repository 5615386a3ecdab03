use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fundamental::{BinaryMatroid, UnionFind};
use crate::graph::canon::weighted_key_unchecked;
use crate::graph::{CanonicalKey, Multigraph};

use super::{Polynomial1V, Polynomial2V};

/// Edge guard for deletion-contraction. Large enough for the complete graph on six vertices.
pub const MAX_TUTTE_EDGES: usize = 16;
/// Ground-set guard for the subset expansion.
pub const MAX_MATROID_ELEMENTS: usize = 20;

/// `1 + y + ... + y^(m-1)`, plus `x` in place of the constant when `bridge`.
fn bundle_factor(m: u32, bridge: bool) -> Polynomial2V {
    let mut p = Polynomial2V::zero();
    p.add_term(u32::from(bridge), 0, BigInt::from(1));
    for j in 1..m {
        p.add_term(0, j, BigInt::from(1));
    }
    p
}

fn components(n: usize, w: &[Vec<u32>], skip: Option<(usize, usize)>) -> usize {
    let mut uf = UnionFind::new(n);
    let mut parts = n;
    for u in 0..n {
        for v in u + 1..n {
            if w[u][v] > 0 && skip != Some((u, v)) && uf.union(u, v) {
                parts -= 1;
            }
        }
    }
    parts
}

struct Tutte {
    memo: HashMap<CanonicalKey, Polynomial2V>,
}

impl Tutte {
    fn eval(&mut self, w: Vec<Vec<u32>>) -> Polynomial2V {
        // isolated vertices do not change the polynomial
        let keep: Vec<usize> = (0..w.len()).filter(|&u| w[u].iter().any(|&m| m > 0)).collect();
        if keep.is_empty() {
            return Polynomial2V::one();
        }
        let w: Vec<Vec<u32>> = keep.iter().map(|&u| keep.iter().map(|&v| w[u][v]).collect()).collect();
        let n = w.len();
        let key = weighted_key_unchecked(n, &w);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let base = components(n, &w, None);
        let mut bundles = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if w[u][v] > 0 {
                    bundles.push((u, v, components(n, &w, Some((u, v))) > base));
                }
            }
        }
        let result = match bundles.iter().find(|b| !b.2) {
            None => bundles
                .iter()
                .fold(Polynomial2V::one(), |acc, &(u, v, _)| &acc * &bundle_factor(w[u][v], true)),
            Some(&(u, v, _)) => {
                let m = w[u][v];
                let mut deleted = w.clone();
                deleted[u][v] = 0;
                deleted[v][u] = 0;
                let contracted = contract(&w, u, v);
                let d = self.eval(deleted);
                let c = self.eval(contracted);
                &d + &(&bundle_factor(m, false) * &c)
            }
        };
        self.memo.insert(key, result.clone());
        result
    }
}

/// Merges `v` into `u`; the edges between them disappear.
fn contract(w: &[Vec<u32>], u: usize, v: usize) -> Vec<Vec<u32>> {
    let n = w.len();
    let idx: Vec<usize> = (0..n).filter(|&x| x != v).collect();
    let merged = |x: usize| if x == v { u } else { x };
    let mut out = vec![vec![0u32; n - 1]; n - 1];
    for a in 0..n {
        for b in 0..n {
            let (ma, mb) = (merged(a), merged(b));
            if ma != mb && a < b {
                let ia = idx.iter().position(|&x| x == ma).unwrap();
                let ib = idx.iter().position(|&x| x == mb).unwrap();
                out[ia][ib] += w[a][b];
                out[ib][ia] += w[a][b];
            }
        }
    }
    out
}

/// Tutte polynomial of a multigraph by deletion-contraction on parallel
/// classes, memoized on canonical keys.
pub fn tutte_graph(h: &Multigraph) -> Result<Polynomial2V> {
    if h.edge_count() > MAX_TUTTE_EDGES {
        return Err(Error::capacity(format!(
            "Tutte polynomials of graphs are limited to {MAX_TUTTE_EDGES} edges"
        )));
    }
    let mut t = Tutte { memo: HashMap::new() };
    Ok(t.eval(h.multiplicities()))
}

/// Tutte polynomial of a binary matroid as the corank-nullity sum over all subsets.
pub fn tutte_matroid(m: &BinaryMatroid) -> Result<Polynomial2V> {
    let e = m.len();
    if e > MAX_MATROID_ELEMENTS {
        return Err(Error::capacity(format!(
            "matroid Tutte polynomials are limited to {MAX_MATROID_ELEMENTS} elements"
        )));
    }
    let sf = m.standard_form();
    let r = sf.basis.len();
    // columns over the basis rows, as bit vectors
    let mut cols: Vec<u64> = Vec::with_capacity(e);
    let order: Vec<&String> = sf.basis.iter().chain(sf.nonbasis.iter()).collect();
    for (k, _) in order.iter().enumerate() {
        if k < r {
            cols.push(1 << k);
        } else {
            let j = k - r;
            cols.push((0..r).filter(|&i| sf.a.get(i, j)).fold(0, |acc, i| acc | 1 << i));
        }
    }
    let mut counts = vec![vec![0u64; e + 1]; r + 1];
    subsets(&cols, 0, 0, 0, [0u64; 64], &mut counts);
    let mut out = Polynomial2V::zero();
    for (corank, row) in counts.iter().enumerate() {
        for (nullity, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let px = Polynomial1V::x_minus_one_pow(corank);
            let py = Polynomial1V::x_minus_one_pow(nullity);
            for (i, a) in px.coeffs().iter().enumerate() {
                for (j, b) in py.coeffs().iter().enumerate() {
                    out.add_term(i as u32, j as u32, a * b * BigInt::from(c));
                }
            }
        }
    }
    Ok(out)
}

fn subsets(cols: &[u64], k: usize, size: usize, rank: usize, basis: [u64; 64], counts: &mut [Vec<u64>]) {
    if k == cols.len() {
        let r_full = counts.len() - 1;
        counts[r_full - rank][size - rank] += 1;
        return;
    }
    subsets(cols, k + 1, size, rank, basis, counts);
    let mut b = basis;
    let mut v = cols[k];
    while v != 0 {
        let top = 63 - v.leading_zeros() as usize;
        if b[top] == 0 {
            b[top] = v;
            subsets(cols, k + 1, size + 1, rank + 1, b, counts);
            return;
        }
        v ^= b[top];
    }
    subsets(cols, k + 1, size + 1, rank, b, counts);
}

/// Common coefficient of `x` and `y` in the Tutte polynomial.
pub fn beta(h: &Multigraph) -> Result<BigInt> {
    if h.edge_count() < 2 {
        return Err(Error::precondition("beta needs at least two edges"));
    }
    let t = tutte_graph(h)?;
    let (bx, by) = (t.coeff(1, 0), t.coeff(0, 1));
    if bx != by {
        return Err(Error::internal(format!("coefficients of x ({bx}) and y ({by}) differ")));
    }
    Ok(bx)
}
