use serde::Serialize;

use crate::construct::{has_minor, MinorPattern, MAX_MINOR_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Outerplane drawing of a 2-connected outerplanar graph: the vertices in
/// the order of the Hamiltonian cycle bounding the outer face, the edges of
/// that cycle, and the chords nested inside it.
#[derive(Debug, Clone, Serialize)]
pub struct OutplaneEmbedding {
    pub host: Multigraph,
    pub hamiltonian_cycle: Vec<usize>,
    /// `cycle_edges[i]` joins positions `i` and `i + 1`; the last one closes the cycle.
    pub cycle_edges: Vec<String>,
    pub chords: Vec<String>,
    /// Innermost chord enclosing each chord, `None` when only the closing
    /// cycle edge encloses it.
    pub chord_parent: Vec<Option<usize>>,
}

/// Bounded faces and their adjacencies. A face is named by the edge that
/// separates it from the rest of the drawing on the side of the closing cycle
/// edge, so the first face is named by the closing edge itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakDual {
    pub faces: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl WeakDual {
    /// Face indices along the path, if the weak dual is one.
    pub fn as_path(&self) -> Option<Vec<usize>> {
        let n = self.faces.len();
        let mut adj = vec![Vec::new(); n];
        for &(x, y) in &self.edges {
            adj[x].push(y);
            adj[y].push(x);
        }
        if adj.iter().any(|a| a.len() > 2) || self.edges.len() + 1 != n {
            return None;
        }
        let start = (0..n).find(|&x| adj[x].len() <= 1)?;
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut x = start;
        while let Some(&y) = adj[x].iter().find(|&&y| y != prev) {
            path.push(y);
            prev = x;
            x = y;
        }
        (path.len() == n).then_some(path)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OuterplanarVerdict {
    pub outerplanar: bool,
    /// outerplanar with a path as weak dual
    pub self_dual: bool,
    pub embedding: Option<OutplaneEmbedding>,
    pub weak_dual: Option<WeakDual>,
    /// face names along the weak dual, when it is a path
    pub weak_dual_path: Option<Vec<String>>,
}

pub fn selfdual_outerplanar_check(h: &Multigraph) -> Result<OuterplanarVerdict> {
    if !h.is_two_connected() {
        return Err(Error::input("selfdual_outerplanar_check requires a 2-connected graph"));
    }
    if h.vertex_count() > MAX_MINOR_VERTICES {
        return Err(Error::capacity(format!(
            "outerplanarity is checked on at most {MAX_MINOR_VERTICES} vertices"
        )));
    }
    if has_minor(h, MinorPattern::K4)? || has_minor(h, MinorPattern::K23)? {
        return Ok(OuterplanarVerdict {
            outerplanar: false,
            self_dual: false,
            embedding: None,
            weak_dual: None,
            weak_dual_path: None,
        });
    }
    let embedding = embed(h)?;
    let weak_dual = weak_dual(&embedding);
    let weak_dual_path = weak_dual
        .as_path()
        .map(|p| p.into_iter().map(|k| weak_dual.faces[k].clone()).collect());
    Ok(OuterplanarVerdict {
        outerplanar: true,
        self_dual: weak_dual_path.is_some(),
        embedding: Some(embedding),
        weak_dual: Some(weak_dual),
        weak_dual_path,
    })
}

/// All Hamiltonian cycles of the underlying simple graph through vertex 0,
/// each listed once (the second vertex is smaller than the last).
fn hamiltonian_cycles(adj: &[u64], limit: usize) -> Vec<Vec<usize>> {
    fn go(adj: &[u64], path: &mut Vec<usize>, used: u64, out: &mut Vec<Vec<usize>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        let n = adj.len();
        let last = *path.last().unwrap();
        if path.len() == n {
            if adj[last] & 1 == 1 && path[1] < last {
                out.push(path.clone());
            }
            return;
        }
        let mut free = adj[last] & !used;
        while free != 0 {
            let y = free.trailing_zeros() as usize;
            free &= free - 1;
            path.push(y);
            go(adj, path, used | 1 << y, out, limit);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(adj, &mut vec![0], 1, &mut out, limit);
    out
}

fn embed(h: &Multigraph) -> Result<OutplaneEmbedding> {
    let n = h.vertex_count();
    let cycle = if n == 2 {
        vec![0, 1]
    } else {
        let adj = h.simple_adjacency()?;
        let cycles = hamiltonian_cycles(&adj, 2);
        if cycles.len() != 1 {
            return Err(Error::internal(format!(
                "outerplanar graph with {} Hamiltonian cycles",
                cycles.len()
            )));
        }
        cycles.into_iter().next().unwrap()
    };
    let mut pos = vec![0usize; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let mut used = vec![false; h.edge_count()];
    let mut cycle_edges = Vec::with_capacity(n);
    for i in 0..n {
        let (x, y) = (cycle[i], cycle[(i + 1) % n]);
        let k = (0..h.edge_count())
            .find(|&k| {
                let e = h.edge(k);
                !used[k] && ((e.u == x && e.v == y) || (e.u == y && e.v == x))
            })
            .ok_or_else(|| Error::internal("cycle edge is missing"))?;
        used[k] = true;
        cycle_edges.push(h.edge(k).id.clone());
    }
    // intervals on the positions; the closing edge spans everything
    let mut items: Vec<(usize, usize, usize, Option<usize>)> = vec![(0, n - 1, 0, None)];
    let mut chords = Vec::new();
    for (k, e) in h.edges().iter().enumerate() {
        if !used[k] {
            let (l, r) = (pos[e.u].min(pos[e.v]), pos[e.u].max(pos[e.v]));
            items.push((l, r, 1, Some(chords.len())));
            chords.push(e.id.clone());
        }
    }
    items.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)).then(a.2.cmp(&b.2)).then(a.3.cmp(&b.3)));
    let mut chord_parent = vec![None; chords.len()];
    let mut stack: Vec<(usize, usize, Option<usize>)> = Vec::new();
    for &(l, r, _, id) in &items {
        while let Some(&(tl, tr, _)) = stack.last() {
            if tl <= l && r <= tr {
                break;
            }
            if tr > l {
                return Err(Error::internal("crossing chords in an outerplanar graph"));
            }
            stack.pop();
        }
        if let Some(c) = id {
            let &(_, _, parent) = stack.last().ok_or_else(|| Error::internal("chord outside the cycle"))?;
            chord_parent[c] = parent;
        }
        stack.push((l, r, id));
    }
    Ok(OutplaneEmbedding {
        host: h.clone(),
        hamiltonian_cycle: cycle,
        cycle_edges,
        chords,
        chord_parent,
    })
}

fn weak_dual(emb: &OutplaneEmbedding) -> WeakDual {
    let mut faces = vec![emb.cycle_edges.last().unwrap().clone()];
    faces.extend(emb.chords.iter().cloned());
    let edges = emb
        .chord_parent
        .iter()
        .enumerate()
        .map(|(c, p)| (p.map_or(0, |q| q + 1), c + 1))
        .collect();
    WeakDual { faces, edges }
}
