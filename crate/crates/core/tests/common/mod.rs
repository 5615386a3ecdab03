//! Independent oracles shared by the integration tests. None of them call
//! into the library beyond reading graph structure.
#![allow(dead_code)]

use std::collections::BTreeMap;

use fundgraph::{BipartiteGraph, Multigraph};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Isomorphism by trying every class-preserving bijection (and the class swap
/// when the classes have equal size).
pub fn brute_isomorphic(g: &BipartiteGraph, h: &BipartiteGraph) -> bool {
    let (ga, gb) = (g.class_a().len(), g.class_b().len());
    let (ha, hb) = (h.class_a().len(), h.class_b().len());
    if g.edge_count() != h.edge_count() {
        return false;
    }
    let direct = ga == ha && gb == hb && matches_some(g, h, false);
    direct || (ga == hb && gb == ha && matches_some(g, h, true))
}

fn matches_some(g: &BipartiteGraph, h: &BipartiteGraph, swap: bool) -> bool {
    let (na, nb) = (g.class_a().len(), g.class_b().len());
    let edge_h = |i: usize, j: usize| {
        if swap {
            h.adjacency().get(j, i)
        } else {
            h.adjacency().get(i, j)
        }
    };
    permutations(na).iter().any(|pa| {
        permutations(nb)
            .iter()
            .any(|pb| (0..na).all(|i| (0..nb).all(|j| g.adjacency().get(i, j) == edge_h(pa[i], pb[j]))))
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Rank over GF(2) of bit rows, by plain elimination.
pub fn gf2_rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) else { continue };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r] >> bit & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

/// Coefficients (constant first) of `sum over vertex subsets S of (x-1)^{n(S)}`
/// where `n(S)` is the GF(2) nullity of the adjacency matrix induced by `S`.
pub fn interlace_by_subsets(adj: &[u64]) -> Vec<BigInt> {
    let n = adj.len();
    let mut by_nullity = vec![0u64; n + 1];
    for s in 0u64..1 << n {
        let verts: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let rows: Vec<u64> = verts
            .iter()
            .map(|&v| verts.iter().enumerate().filter(|&(_, &u)| adj[v] >> u & 1 == 1).fold(0u64, |m, (k, _)| m | 1 << k))
            .collect();
        by_nullity[verts.len() - gf2_rank(rows)] += 1;
    }
    // expand sum c_k (x-1)^k
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (k, &c) in by_nullity.iter().enumerate() {
        for (i, b) in binomials(k).into_iter().enumerate() {
            let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
            coeffs[i] += BigInt::from(c) * b * sign;
        }
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&BigInt::from(0)) {
        coeffs.pop();
    }
    coeffs
}

fn binomials(k: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for _ in 0..k {
        let mut next = vec![BigInt::from(1); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row
}

fn graph_rank(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut r = 0;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            r += 1;
        }
    }
    r
}

/// Tutte polynomial by the corank-nullity sum over edge subsets, as a map
/// `(i, j) -> coefficient of x^i y^j`.
pub fn tutte_by_subsets(h: &Multigraph) -> BTreeMap<(usize, usize), BigInt> {
    let edges: Vec<(usize, usize)> = h.edges().iter().map(|e| (e.u, e.v)).collect();
    let m = edges.len();
    let full = graph_rank(h.vertex_count(), &edges);
    // sum (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}
    let mut by = BTreeMap::new();
    for s in 0u64..1 << m {
        let sub: Vec<(usize, usize)> = (0..m).filter(|&k| s >> k & 1 == 1).map(|k| edges[k]).collect();
        let r = graph_rank(h.vertex_count(), &sub);
        *by.entry((full - r, sub.len() - r)).or_insert(0i64) += 1;
    }
    let mut out: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for ((p, q), c) in by {
        let bp = binomials(p);
        let bq = binomials(q);
        for (i, a) in bp.iter().enumerate() {
            for (j, b) in bq.iter().enumerate() {
                let sign = if (p - i + q - j) % 2 == 0 { 1 } else { -1 };
                *out.entry((i, j)).or_insert_with(|| BigInt::from(0)) += a * b * BigInt::from(c) * sign;
            }
        }
    }
    out.retain(|_, v| *v != BigInt::from(0));
    out
}

/// Random bipartite graph strategy with class sizes up to `max_side`.
pub fn bipartite_strategy(max_side: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_side, 1..=max_side)
        .prop_flat_map(|(na, nb)| (Just(na), Just(nb), proptest::collection::vec(any::<bool>(), na * nb)))
        .prop_map(|(na, nb, bits)| {
            let edges: Vec<(usize, usize)> = (0..na * nb).filter(|&k| bits[k]).map(|k| (k / nb, k % nb)).collect();
            BipartiteGraph::from_edges(na, nb, &edges).unwrap()
        })
}

/// Random connected bipartite graph: a spanning tree grown vertex by vertex
/// plus extra random edges.
pub fn connected_bipartite_strategy(max_n: usize) -> impl Strategy<Value = BipartiteGraph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<u32>(), n),
                proptest::collection::vec(any::<bool>(), n * n),
            )
        })
        .prop_map(|(n, picks, extra)| {
            // vertex 0 in A; each new vertex hangs off an earlier vertex of the other side
            let mut side = vec![false; n];
            let mut pairs = Vec::new();
            for v in 1..n {
                let p = picks[v] as usize % v;
                side[v] = !side[p];
                pairs.push((p, v));
            }
            for x in 0..n {
                for y in x + 1..n {
                    if side[x] != side[y] && extra[x * n + y] {
                        pairs.push((x, y));
                    }
                }
            }
            let a: Vec<usize> = (0..n).filter(|&v| !side[v]).collect();
            let b: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
            let idx = |v: usize| if side[v] { b.iter().position(|&x| x == v).unwrap() } else { a.iter().position(|&x| x == v).unwrap() };
            let mut edges: Vec<(usize, usize)> = pairs
                .iter()
                .map(|&(x, y)| if side[x] { (idx(y), idx(x)) } else { (idx(x), idx(y)) })
                .collect();
            edges.sort();
            edges.dedup();
            BipartiteGraph::from_edges(a.len(), b.len(), &edges).unwrap()
        })
}
