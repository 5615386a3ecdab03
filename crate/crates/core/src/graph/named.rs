//! Small named bipartite graphs. Labels are `a0, a1, ...` for class A and
//! `b0, b1, ...` for class B.

use super::BipartiteGraph;

fn build(na: usize, nb: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
    BipartiteGraph::from_edges(na, nb, edges).expect("named graph is well formed")
}

/// The single edge `a0 b0`.
pub fn k2() -> BipartiteGraph {
    build(1, 1, &[(0, 0)])
}

/// Even cycle `a0 b0 a1 b1 ... a(k-1) b(k-1)` on `n = 2k` vertices.
pub fn cycle(n: usize) -> BipartiteGraph {
    assert!(n >= 4 && n.is_multiple_of(2), "bipartite cycles have even length >= 4");
    let k = n / 2;
    let mut e = Vec::with_capacity(n);
    for i in 0..k {
        e.push((i, i));
        e.push(((i + 1) % k, i));
    }
    build(k, k, &e)
}

/// Path `a0 b0 a1 b1 ...` on `n` vertices.
pub fn path(n: usize) -> BipartiteGraph {
    assert!(n >= 1);
    let na = n.div_ceil(2);
    let nb = n / 2;
    let mut e = Vec::new();
    for j in 0..nb {
        e.push((j, j));
        if j + 1 < na {
            e.push((j + 1, j));
        }
    }
    build(na, nb, &e)
}

/// The 6-cycle `a0 b0 a1 b1 a2 b2` with the chord `a0 b1` between antipodal vertices.
pub fn domino() -> BipartiteGraph {
    build(3, 3, &[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2), (0, 1)])
}

/// The square `a0 b0 a1 b1` with pending vertices `b2` on `a0` and `b3` on `a1`.
pub fn arrow() -> BipartiteGraph {
    build(2, 4, &[(0, 0), (1, 0), (1, 1), (0, 1), (0, 2), (1, 3)])
}

/// The claw `K_{1,3}` with every edge subdivided: center `a0`, middle
/// vertices `b0 b1 b2`, leaves `a1 a2 a3`.
pub fn t2() -> BipartiteGraph {
    build(4, 3, &[(0, 0), (0, 1), (0, 2), (1, 0), (2, 1), (3, 2)])
}

/// Two disjoint edges `a0 b0` and `a1 b1`.
pub fn two_k2() -> BipartiteGraph {
    build(2, 2, &[(0, 0), (1, 1)])
}

/// Star `K_{1,k}` with center `a0`.
pub fn star(k: usize) -> BipartiteGraph {
    let e: Vec<(usize, usize)> = (0..k).map(|j| (0, j)).collect();
    build(1, k, &e)
}

pub fn complete(p: usize, q: usize) -> BipartiteGraph {
    let mut e = Vec::with_capacity(p * q);
    for i in 0..p {
        for j in 0..q {
            e.push((i, j));
        }
    }
    build(p, q, &e)
}
