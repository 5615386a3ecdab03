//! Edge pivoting on bipartite graphs and pivot orbits.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, BipartiteJson, CanonicalForm, CanonicalKey, Side};

pub const DEFAULT_ORBIT_CAP: usize = 100_000;

/// `G^{uv}`: complements the edges between `N(u) - v` and `N(v) - u`, then
/// swaps the labels `u` and `v`. The labels may be given in either order.
pub fn pivot(g: &BipartiteGraph, u: &str, v: &str) -> Result<BipartiteGraph> {
    let x = g.require(u)?;
    let y = g.require(v)?;
    let (i, j) = match (g.locate(x), g.locate(y)) {
        ((Side::A, i), (Side::B, j)) | ((Side::B, j), (Side::A, i)) => (i, j),
        _ => return Err(Error::precondition(format!("{u} and {v} lie in the same class"))),
    };
    if !g.adjacency().get(i, j) {
        return Err(Error::precondition(format!("{u}{v} is not an edge")));
    }
    Ok(pivot_at(g, i, j))
}

/// Pivot on the entry `(i, j)` of the reduced adjacency matrix, which must be one.
pub(crate) fn pivot_at(g: &BipartiteGraph, i: usize, j: usize) -> BipartiteGraph {
    let mut m = g.adjacency().clone();
    m.pivot(i, j).expect("pivot entry is one");
    let mut a = g.class_a().to_vec();
    let mut b = g.class_b().to_vec();
    std::mem::swap(&mut a[i], &mut b[j]);
    BipartiteGraph::from_matrix(a, b, m).expect("pivoting preserves shape and labels")
}

/// Transition `from --(pivot on edge)--> to` between orbit members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub from: usize,
    pub edge: (String, String),
    pub to: usize,
}

/// Pivot orbit, deduplicated up to isomorphism. Members are listed in BFS
/// order; the first one is the seed.
#[derive(Debug, Clone)]
pub struct Orbit {
    members: Vec<(CanonicalKey, BipartiteGraph)>,
    index: HashMap<CanonicalKey, usize>,
    transitions: Vec<Transition>,
    complete: bool,
}

#[derive(Serialize)]
struct OrbitMemberJson<'a> {
    key: String,
    graph: BipartiteJson,
    transitions: Vec<TransitionJson<'a>>,
}

#[derive(Serialize)]
struct TransitionJson<'a> {
    pivot: [&'a str; 2],
    to: String,
}

impl Orbit {
    pub fn seed(&self) -> &BipartiteGraph {
        &self.members[0].1
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = &BipartiteGraph> {
        self.members.iter().map(|(_, g)| g)
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalKey> {
        self.members.iter().map(|(k, _)| k)
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.index.contains_key(key)
    }

    pub fn member(&self, key: &CanonicalKey) -> Option<&BipartiteGraph> {
        self.index.get(key).map(|&k| &self.members[k].1)
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// False for the partial orbit attached to a cap error.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Shortest pivot sequence from the seed to the member with `key`, each
    /// pivot given by the edge labels in the graph it is applied to.
    pub fn path_to(&self, key: &CanonicalKey) -> Option<Vec<(String, String)>> {
        let target = *self.index.get(key)?;
        let mut back: Vec<Option<&Transition>> = vec![None; self.members.len()];
        let mut seen = vec![false; self.members.len()];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut out_edges: Vec<Vec<&Transition>> = vec![Vec::new(); self.members.len()];
        for t in &self.transitions {
            out_edges[t.from].push(t);
        }
        while let Some(x) = queue.pop_front() {
            for t in &out_edges[x] {
                if !seen[t.to] {
                    seen[t.to] = true;
                    back[t.to] = Some(t);
                    queue.push_back(t.to);
                }
            }
        }
        if !seen[target] {
            return None;
        }
        let mut path = Vec::new();
        let mut x = target;
        while let Some(t) = back[x] {
            path.push(t.edge.clone());
            x = t.from;
        }
        path.reverse();
        Some(path)
    }

    /// Transition digraph: one node per member (`m0` is the seed), one arc
    /// per distinct pivot move, labeled with the pivot edges taking it.
    pub fn to_dot(&self) -> String {
        let mut arcs: std::collections::BTreeMap<(usize, usize), Vec<String>> = Default::default();
        for t in &self.transitions {
            arcs.entry((t.from, t.to)).or_default().push(format!("{}-{}", t.edge.0, t.edge.1));
        }
        let mut out = String::from("digraph orbit {\n");
        for (k, (_, g)) in self.members.iter().enumerate() {
            let shape = if k == 0 { "doublecircle" } else { "circle" };
            out.push_str(&format!(
                "  m{k} [shape={shape}, label=\"m{k}\\n{}v {}e\"];\n",
                g.vertex_count(),
                g.edge_count()
            ));
        }
        for ((from, to), edges) in arcs {
            out.push_str(&format!("  m{from} -> m{to} [label=\"{}\"];\n", edges.join(" ")));
        }
        out.push_str("}\n");
        out
    }

    /// Members with their keys, graphs and outgoing transitions.
    pub fn to_json(&self) -> serde_json::Value {
        let mut out: Vec<OrbitMemberJson> = self
            .members
            .iter()
            .map(|(k, g)| OrbitMemberJson {
                key: k.to_hex(),
                graph: g.clone().into(),
                transitions: Vec::new(),
            })
            .collect();
        for t in &self.transitions {
            out[t.from].transitions.push(TransitionJson {
                pivot: [&t.edge.0, &t.edge.1],
                to: self.members[t.to].0.to_hex(),
            });
        }
        serde_json::json!({
            "size": self.members.len(),
            "complete": self.complete,
            "members": out,
        })
    }
}

/// Closure of `g` under pivoting on every edge, by BFS over isomorphism
/// classes. Fails with [`Error::OrbitCap`] once more than `cap` classes are found.
pub fn orbit(g: &BipartiteGraph, cap: usize) -> Result<Orbit> {
    if cap == 0 {
        return Err(Error::input("orbit cap must be positive"));
    }
    if !g.is_connected() {
        return Err(Error::input("orbits are computed for connected graphs"));
    }
    let seed_key = g.canonical_key()?;
    let mut orbit = Orbit {
        members: vec![(seed_key.clone(), g.clone())],
        index: HashMap::from([(seed_key, 0)]),
        transitions: Vec::new(),
        complete: false,
    };
    let mut next = 0;
    while next < orbit.members.len() {
        let current = orbit.members[next].1.clone();
        for (i, j) in current.edges() {
            let h = pivot_at(&current, i, j);
            let key = h.canonical_key()?;
            let to = match orbit.index.get(&key) {
                Some(&t) => t,
                None => {
                    if orbit.members.len() == cap {
                        return Err(Error::OrbitCap { cap, partial: Box::new(orbit) });
                    }
                    orbit.index.insert(key.clone(), orbit.members.len());
                    orbit.members.push((key, h));
                    orbit.members.len() - 1
                }
            };
            orbit.transitions.push(Transition {
                from: next,
                edge: (current.class_a()[i].clone(), current.class_b()[j].clone()),
                to,
            });
        }
        next += 1;
    }
    orbit.complete = true;
    Ok(orbit)
}

/// Whether `g2` is isomorphic to a member of the orbit of `g1`.
pub fn pivot_equivalent(g1: &BipartiteGraph, g2: &BipartiteGraph) -> Result<bool> {
    pivot_equivalent_capped(g1, g2, DEFAULT_ORBIT_CAP)
}

pub fn pivot_equivalent_capped(g1: &BipartiteGraph, g2: &BipartiteGraph, cap: usize) -> Result<bool> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() == 0 || g2.edge_count() == 0 {
        return Ok(g1.canonical_key()? == g2.canonical_key()?);
    }
    let key = g2.canonical_key()?;
    Ok(orbit(g1, cap)?.contains(&key))
}

/// Pivots an even hole `C_k` (k > 6) on `edge` and deletes the edge's ends,
/// which leaves `C_{k-2}`.
pub fn check_pivot_delete_hole(g: &BipartiteGraph, u: &str, v: &str) -> Result<BipartiteGraph> {
    let k = g.vertex_count();
    let is_cycle = g.is_connected() && (0..k).all(|x| g.degree(x) == 2) && k == g.edge_count();
    if !is_cycle || k <= 6 {
        return Err(Error::input(format!("expected an even cycle longer than 6, got {k} vertices")));
    }
    let p = pivot(g, u, v)?;
    p.remove_vertices(&[u, v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn key(g: &BipartiteGraph) -> CanonicalKey {
        g.canonical_key().unwrap()
    }

    #[test]
    fn block_formula_on_the_graph_level() {
        let d = named::domino();
        for (x, y) in d.edge_labels() {
            let p = pivot(&d, &x, &y).unwrap();
            // reference: definition on neighborhoods, then label swap
            let nx: Vec<String> = d.neighbors(d.index_of(&x).unwrap()).iter().map(|&w| d.label(w).to_string()).filter(|w| *w != y).collect();
            let ny: Vec<String> = d.neighbors(d.index_of(&y).unwrap()).iter().map(|&w| d.label(w).to_string()).filter(|w| *w != x).collect();
            let swap = |l: &str| if l == x { y.clone() } else if l == y { x.clone() } else { l.to_string() };
            for a in d.class_a() {
                for b in d.class_b() {
                    let toggled = (nx.contains(b) && ny.contains(a)) || (nx.contains(a) && ny.contains(b));
                    let expected = d.has_edge_labels(a, b) ^ toggled;
                    assert_eq!(p.has_edge_labels(&swap(a), &swap(b)), expected);
                }
            }
        }
    }

    #[test]
    fn pivots_of_c6_and_domino() {
        let c6 = named::cycle(6);
        for (x, y) in c6.edge_labels() {
            assert_eq!(key(&pivot(&c6, &x, &y).unwrap()), key(&named::domino()));
        }
        let d = named::domino();
        let mut seen = Vec::new();
        for (x, y) in d.edge_labels() {
            let k = key(&pivot(&d, &x, &y).unwrap());
            assert!(k == key(&c6) || k == key(&d));
            seen.push(k == key(&c6));
        }
        // only the two edges whose ends both have degree 2 give C6
        assert_eq!(seen.iter().filter(|&&s| s).count(), 2);
    }

    #[test]
    fn pending_edge_pivot_is_isomorphic() {
        let a = named::arrow();
        let p = pivot(&a, "a0", "b2").unwrap();
        assert_eq!(key(&p), key(&a));
    }

    #[test]
    fn non_edges_are_rejected() {
        let c6 = named::cycle(6);
        assert!(matches!(pivot(&c6, "a0", "b1"), Err(Error::Precondition(_))));
        assert!(matches!(pivot(&c6, "a0", "a1"), Err(Error::Precondition(_))));
        assert!(matches!(pivot(&c6, "a0", "zz"), Err(Error::Input(_))));
    }

    #[test]
    fn small_orbits() {
        assert_eq!(orbit(&named::k2(), 10).unwrap().len(), 1);
        let o = orbit(&named::cycle(6), 10).unwrap();
        assert_eq!(o.len(), 2);
        assert!(o.contains(&key(&named::domino())));
        let star = orbit(&named::star(3), 10).unwrap();
        assert!(star.members().all(|g| g.edge_count() == g.vertex_count() - 1));
        assert!(pivot_equivalent(&named::cycle(6), &named::domino()).unwrap());
        assert!(!pivot_equivalent(&named::k2(), &named::path(3)).unwrap());
        match orbit(&named::cycle(6), 1) {
            Err(Error::OrbitCap { cap: 1, partial }) => assert!(!partial.is_complete()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn orbit_paths_replay() {
        let o = orbit(&named::cycle(6), 10).unwrap();
        let target = key(&named::domino());
        let path = o.path_to(&target).unwrap();
        let mut g = named::cycle(6);
        for (x, y) in &path {
            g = pivot(&g, x, y).unwrap();
        }
        assert_eq!(key(&g), target);
    }

    #[test]
    fn hole_shrinks_by_two() {
        let c8 = named::cycle(8);
        let r = check_pivot_delete_hole(&c8, "a0", "b0").unwrap();
        assert_eq!(key(&r), key(&named::cycle(6)));
        let c10 = named::cycle(10);
        assert_eq!(key(&check_pivot_delete_hole(&c10, "a2", "b2").unwrap()), key(&named::cycle(8)));
        assert!(check_pivot_delete_hole(&named::cycle(6), "a0", "b0").is_err());
    }

    #[test]
    fn orbit_dot_lists_members_and_moves() {
        let dot = orbit(&named::cycle(6), DEFAULT_ORBIT_CAP).unwrap().to_dot();
        assert!(dot.starts_with("digraph orbit {"));
        assert!(dot.contains("m0 [shape=doublecircle"));
        assert!(dot.contains("m0 -> m1"));
    }
}
