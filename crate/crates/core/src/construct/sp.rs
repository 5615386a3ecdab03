use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Multigraph};

/// One step of a series-parallel construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SpStep {
    /// Two parallel edges between vertices 0 and 1.
    Digon { edges: [String; 2] },
    /// A new edge with the same ends as `of`.
    Parallel { of: String, new_edge: String },
    /// Subdivides `subdivide` with a new vertex `z` (the next free index).
    /// The subdivided edge keeps its end with the smaller index; the new
    /// edge joins `z` to the other end.
    Series {
        subdivide: String,
        new_edge: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        new_vertex: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpConstruction {
    pub steps: Vec<SpStep>,
}

impl SpConstruction {
    pub fn new(steps: Vec<SpStep>) -> Self {
        SpConstruction { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Builds the multigraph described by a construction.
pub fn replay_sp(seq: &SpConstruction) -> Result<Multigraph> {
    let mut edges: Vec<Edge> = Vec::new();
    let mut n = 0usize;
    let find = |edges: &[Edge], id: &str| {
        edges
            .iter()
            .position(|e| e.id == id)
            .ok_or_else(|| Error::input(format!("step refers to unknown edge {id}")))
    };
    for (k, step) in seq.steps.iter().enumerate() {
        match (k, step) {
            (0, SpStep::Digon { edges: [x, y] }) => {
                n = 2;
                edges.push(Edge::new(x.clone(), 0, 1));
                edges.push(Edge::new(y.clone(), 0, 1));
            }
            (0, _) => return Err(Error::input("a construction starts with a digon")),
            (_, SpStep::Digon { .. }) => return Err(Error::input("only the first step may be a digon")),
            (_, SpStep::Parallel { of, new_edge }) => {
                let e = &edges[find(&edges, of)?];
                let (u, v) = (e.u, e.v);
                edges.push(Edge::new(new_edge.clone(), u, v));
            }
            (_, SpStep::Series { subdivide, new_edge, new_vertex }) => {
                if new_vertex.is_some_and(|z| z != n) {
                    return Err(Error::input(format!(
                        "series step names vertex {} but the next vertex is {n}",
                        new_vertex.unwrap()
                    )));
                }
                let k = find(&edges, subdivide)?;
                let (u, v) = (edges[k].u.min(edges[k].v), edges[k].u.max(edges[k].v));
                let z = n;
                n += 1;
                edges[k] = Edge::new(subdivide.clone(), u, z);
                edges.push(Edge::new(new_edge.clone(), v, z));
            }
        }
    }
    if seq.is_empty() {
        return Err(Error::input("empty construction"));
    }
    Multigraph::new(n, edges)
}

/// Structural reduction on edge slots (original edge indices).
#[derive(Debug, Clone, Copy)]
enum Reduction {
    /// Delete slot `remove`, parallel to slot `keep`.
    Parallel { keep: usize, remove: usize },
    /// Smooth vertex `z` whose two edge slots are `s1` (kept) and `s2`.
    Series { z: usize, s1: usize, s2: usize },
}

struct Reducer {
    ends: Vec<Option<(usize, usize)>>,
    alive_vertices: usize,
    alive_edges: usize,
    n: usize,
}

impl Reducer {
    fn new(h: &Multigraph) -> Self {
        Reducer {
            ends: h.edges().iter().map(|e| Some((e.u, e.v))).collect(),
            alive_vertices: h.vertex_count(),
            alive_edges: h.edge_count(),
            n: h.vertex_count(),
        }
    }

    fn done(&self) -> bool {
        self.alive_vertices == 2 && self.alive_edges == 2
    }

    fn same_ends(a: (usize, usize), b: (usize, usize)) -> bool {
        a == b || a == (b.1, b.0)
    }

    fn available(&self, first_only: bool) -> Vec<Reduction> {
        let mut out = Vec::new();
        for j in 0..self.ends.len() {
            let Some(ej) = self.ends[j] else { continue };
            if let Some(i) = (0..j).find(|&i| self.ends[i].is_some_and(|ei| Self::same_ends(ei, ej))) {
                out.push(Reduction::Parallel { keep: i, remove: j });
                if first_only {
                    return out;
                }
            }
        }
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (s, e) in self.ends.iter().enumerate() {
            if let Some((u, v)) = *e {
                incident[u].push(s);
                incident[v].push(s);
            }
        }
        for (z, inc) in incident.iter().enumerate() {
            if let [s1, s2] = inc[..] {
                let a = other(self.ends[s1].unwrap(), z);
                let b = other(self.ends[s2].unwrap(), z);
                if a != b {
                    out.push(Reduction::Series { z, s1, s2 });
                    if first_only {
                        return out;
                    }
                }
            }
        }
        out
    }

    fn apply(&mut self, r: Reduction) {
        match r {
            Reduction::Parallel { remove, .. } => {
                self.ends[remove] = None;
                self.alive_edges -= 1;
            }
            Reduction::Series { z, s1, s2 } => {
                let a = other(self.ends[s1].unwrap(), z);
                let b = other(self.ends[s2].unwrap(), z);
                self.ends[s1] = Some((a, b));
                self.ends[s2] = None;
                self.alive_edges -= 1;
                self.alive_vertices -= 1;
            }
        }
    }
}

fn other((u, v): (usize, usize), x: usize) -> usize {
    if u == x {
        v
    } else {
        u
    }
}

fn check_two_connected(h: &Multigraph) -> Result<()> {
    if !h.is_two_connected() {
        return Err(Error::input("series-parallel recognition requires a 2-connected multigraph"));
    }
    Ok(())
}

/// Applies reductions chosen by `pick` until none applies. Returns the
/// reductions and the final state.
fn reduce(h: &Multigraph, pick: &mut dyn FnMut(&[Reduction]) -> usize, first_only: bool) -> (Vec<Reduction>, Reducer) {
    let mut state = Reducer::new(h);
    let mut done = Vec::new();
    while !state.done() {
        let options = state.available(first_only);
        if options.is_empty() {
            break;
        }
        let r = options[pick(&options)];
        state.apply(r);
        done.push(r);
    }
    (done, state)
}

/// A construction together with the map from replay vertices to the
/// vertices of the recognized graph.
#[derive(Debug, Clone)]
pub struct SpRecognition {
    pub construction: SpConstruction,
    pub vertex_map: Vec<usize>,
}

/// Reverses a maximal sequence of series and parallel reductions (parallel
/// merges first, then smoothing of the lowest-numbered degree-2 vertex).
/// The replay of the result equals `h` with the same edge ids, vertices
/// renumbered by [`SpRecognition::vertex_map`].
pub fn sp_recognize_mapped(h: &Multigraph) -> Result<Option<SpRecognition>> {
    check_two_connected(h)?;
    let (reductions, state) = reduce(h, &mut |_| 0, true);
    if !state.done() {
        return Ok(None);
    }
    Ok(Some(build_construction(h, &reductions, &state)))
}

pub fn sp_recognize(h: &Multigraph) -> Result<Option<SpConstruction>> {
    Ok(sp_recognize_mapped(h)?.map(|r| r.construction))
}

/// Whether a maximal sequence of reductions taken in random order ends at a digon.
pub fn sp_reduces_to_digon<R: rand::Rng>(h: &Multigraph, rng: &mut R) -> Result<bool> {
    check_two_connected(h)?;
    let (_, state) = reduce(h, &mut |opts| rng.random_range(0..opts.len()), false);
    Ok(state.done())
}

fn build_construction(h: &Multigraph, reductions: &[Reduction], state: &Reducer) -> SpRecognition {
    // replay indices: the final digon ends are 0 and 1, then smoothed vertices in reverse order
    let (p, q) = state.ends.iter().flatten().next().copied().unwrap();
    let mut vertex_map = vec![p.min(q), p.max(q)];
    for r in reductions.iter().rev() {
        if let Reduction::Series { z, .. } = r {
            vertex_map.push(*z);
        }
    }
    let mut replay_index = vec![usize::MAX; h.vertex_count()];
    for (i, &v) in vertex_map.iter().enumerate() {
        replay_index[v] = i;
    }
    let mut ids: Vec<String> = h.edge_ids();
    let mut ends: Vec<Option<(usize, usize)>> = h.edges().iter().map(|e| Some((e.u, e.v))).collect();
    let mut steps = Vec::with_capacity(reductions.len() + 1);
    for &r in reductions {
        match r {
            Reduction::Parallel { keep, remove } => {
                steps.push(SpStep::Parallel { of: ids[keep].clone(), new_edge: ids[remove].clone() });
                ends[remove] = None;
            }
            Reduction::Series { z, s1, s2 } => {
                let a = other(ends[s1].unwrap(), z);
                let b = other(ends[s2].unwrap(), z);
                // the surviving id is the one at the end with the smaller replay index
                let (kept, new) = if replay_index[a] < replay_index[b] {
                    (ids[s1].clone(), ids[s2].clone())
                } else {
                    (ids[s2].clone(), ids[s1].clone())
                };
                steps.push(SpStep::Series {
                    subdivide: kept.clone(),
                    new_edge: new,
                    new_vertex: Some(replay_index[z]),
                });
                ids[s1] = kept;
                ends[s1] = Some((a, b));
                ends[s2] = None;
            }
        }
    }
    let last: Vec<String> = (0..ends.len()).filter(|&s| ends[s].is_some()).map(|s| ids[s].clone()).collect();
    steps.push(SpStep::Digon { edges: [last[0].clone(), last[1].clone()] });
    steps.reverse();
    SpRecognition { construction: SpConstruction::new(steps), vertex_map }
}
