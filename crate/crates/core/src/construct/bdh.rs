use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::graph::{find_induced, BipartiteGraph, Pattern, Side};

/// One step of a defining sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BdhStep {
    Initial { label: String },
    /// A new vertex adjacent to `attach_to` only.
    Pending { attach_to: String, new_label: String },
    /// A new vertex with the same neighborhood as `of` (twins in a bipartite
    /// graph are never adjacent).
    Twin { of: String, new_label: String },
}

impl BdhStep {
    pub fn new_label(&self) -> &str {
        match self {
            BdhStep::Initial { label } => label,
            BdhStep::Pending { new_label, .. } | BdhStep::Twin { new_label, .. } => new_label,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DefiningSequence {
    pub steps: Vec<BdhStep>,
}

impl DefiningSequence {
    pub fn new(steps: Vec<BdhStep>) -> Self {
        DefiningSequence { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Sides of every introduced label in replay: the initial vertex is in
    /// class A, pending vertices switch class and twins keep it.
    pub fn sides(&self) -> Result<HashMap<String, Side>> {
        let mut side: HashMap<String, Side> = HashMap::new();
        for (k, step) in self.steps.iter().enumerate() {
            let s = match (k, step) {
                (0, BdhStep::Initial { .. }) => Side::A,
                (0, _) => return Err(Error::input("a defining sequence starts with an initial vertex")),
                (_, BdhStep::Initial { .. }) => {
                    return Err(Error::input("only the first step may be an initial vertex"))
                }
                (_, BdhStep::Pending { attach_to, .. }) => lookup(&side, attach_to)?.other(),
                (_, BdhStep::Twin { of, .. }) => lookup(&side, of)?,
            };
            if side.insert(step.new_label().to_string(), s).is_some() {
                return Err(Error::input(format!("label {} introduced twice", step.new_label())));
            }
        }
        Ok(side)
    }
}

fn lookup(side: &HashMap<String, Side>, label: &str) -> Result<Side> {
    side.get(label)
        .copied()
        .ok_or_else(|| Error::input(format!("step refers to unknown label {label}")))
}

/// Builds the graph described by a defining sequence. Classes list labels in
/// order of introduction.
pub fn replay_bdh(seq: &DefiningSequence) -> Result<BipartiteGraph> {
    if seq.is_empty() {
        return Err(Error::input("empty defining sequence"));
    }
    let side = seq.sides()?;
    let labels: Vec<&str> = seq.steps.iter().map(|s| s.new_label()).collect();
    let pos: HashMap<&str, usize> = labels.iter().enumerate().map(|(k, &l)| (l, k)).collect();
    let mut nbrs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); labels.len()];
    for (k, step) in seq.steps.iter().enumerate() {
        match step {
            BdhStep::Initial { .. } => {}
            BdhStep::Pending { attach_to, .. } => {
                let x = pos[attach_to.as_str()];
                nbrs[k].insert(x);
                nbrs[x].insert(k);
            }
            BdhStep::Twin { of, .. } => {
                let x = pos[of.as_str()];
                if nbrs[x].is_empty() {
                    return Err(Error::input(format!(
                        "twin of isolated vertex {of} would disconnect the graph"
                    )));
                }
                let copy = nbrs[x].clone();
                for &y in &copy {
                    nbrs[y].insert(k);
                }
                nbrs[k] = copy;
            }
        }
    }
    let a: Vec<usize> = (0..labels.len()).filter(|&k| side[labels[k]] == Side::A).collect();
    let b: Vec<usize> = (0..labels.len()).filter(|&k| side[labels[k]] == Side::B).collect();
    let col: HashMap<usize, usize> = b.iter().enumerate().map(|(j, &k)| (k, j)).collect();
    let mut m = Gf2Matrix::zeros(a.len(), b.len());
    for (i, &k) in a.iter().enumerate() {
        for y in &nbrs[k] {
            m.set(i, col[y], true);
        }
    }
    BipartiteGraph::from_matrix(
        a.iter().map(|&k| labels[k].to_string()).collect(),
        b.iter().map(|&k| labels[k].to_string()).collect(),
        m,
    )
}

/// Finds a defining sequence by repeatedly removing a pending vertex (or,
/// failing that, one vertex of a twin pair), preferring the smallest label.
/// The sequence is oriented so that its initial vertex lies in class A of
/// `g`; its replay is then `g` itself up to the order of labels.
pub fn bdh_recognize(g: &BipartiteGraph) -> Result<Option<DefiningSequence>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::input("empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::input("bdh_recognize requires a connected graph"));
    }
    let mut nbrs: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).into_iter().collect()).collect();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    // process vertices in label order so "smallest label" is the first hit
    let mut by_label: Vec<usize> = (0..n).collect();
    by_label.sort_by(|&x, &y| g.label(x).cmp(g.label(y)));
    let mut removed: Vec<BdhStep> = Vec::with_capacity(n);
    while alive.len() > 1 {
        let pending = by_label.iter().copied().find(|&v| alive.contains(&v) && nbrs[v].len() == 1);
        let step = if let Some(v) = pending {
            let u = *nbrs[v].iter().next().unwrap();
            (v, BdhStep::Pending { attach_to: g.label(u).to_string(), new_label: g.label(v).to_string() })
        } else {
            let twin = by_label.iter().copied().filter(|v| alive.contains(v)).find_map(|v| {
                by_label
                    .iter()
                    .copied()
                    .find(|&w| w != v && alive.contains(&w) && nbrs[w] == nbrs[v])
                    .map(|w| (v, w))
            });
            match twin {
                Some((v, w)) => (v, BdhStep::Twin { of: g.label(w).to_string(), new_label: g.label(v).to_string() }),
                None => return Ok(None),
            }
        };
        let v = step.0;
        for u in std::mem::take(&mut nbrs[v]) {
            nbrs[u].remove(&v);
        }
        alive.remove(&v);
        removed.push(step.1);
    }
    let last = *alive.iter().next().unwrap();
    removed.push(BdhStep::Initial { label: g.label(last).to_string() });
    removed.reverse();
    let mut seq = DefiningSequence::new(removed);
    if g.side(last) == Side::B && seq.len() > 1 {
        seq = reroot(&seq);
    }
    Ok(Some(seq))
}

/// Exchanges the roles of the first two vertices, which always form an edge.
pub(crate) fn reroot(seq: &DefiningSequence) -> DefiningSequence {
    let mut steps = seq.steps.clone();
    if let (BdhStep::Initial { label: x }, BdhStep::Pending { new_label: y, .. }) = (&steps[0], &steps[1]) {
        let (x, y) = (x.clone(), y.clone());
        steps[0] = BdhStep::Initial { label: y.clone() };
        steps[1] = BdhStep::Pending { attach_to: y, new_label: x };
    }
    DefiningSequence::new(steps)
}

/// Result of the forbidden-subgraph test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenCheck {
    /// no forbidden pattern was found
    pub free: bool,
    pub pattern: Option<Pattern>,
    pub witness: Option<Vec<String>>,
}

/// Hole- and domino-freeness, with a witness when one of them occurs.
pub fn bdh_check_forbidden(g: &BipartiteGraph) -> Result<ForbiddenCheck> {
    for p in [Pattern::Hole, Pattern::Domino] {
        if let Some(w) = find_induced(g, p)? {
            return Ok(ForbiddenCheck { free: false, pattern: Some(p), witness: Some(w) });
        }
    }
    Ok(ForbiddenCheck { free: true, pattern: None, witness: None })
}

/// Domain error for a graph that is not BDH, carrying a forbidden witness.
pub(crate) fn not_bdh(g: &BipartiteGraph) -> Error {
    match bdh_check_forbidden(g) {
        Ok(ForbiddenCheck { pattern: Some(p), witness, .. }) => Error::Domain {
            message: format!("graph is not bipartite distance-hereditary: induced {}", p.name()),
            witness,
        },
        Ok(_) => Error::internal("no pending vertex or twin, yet no hole or domino"),
        Err(e) => e,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, CanonicalForm};

    fn pending(a: &str, n: &str) -> BdhStep {
        BdhStep::Pending { attach_to: a.into(), new_label: n.into() }
    }
    fn twin(a: &str, n: &str) -> BdhStep {
        BdhStep::Twin { of: a.into(), new_label: n.into() }
    }
    fn initial(l: &str) -> BdhStep {
        BdhStep::Initial { label: l.into() }
    }

    #[test]
    fn replay_small_sequences() {
        let k2 = replay_bdh(&DefiningSequence::new(vec![initial("v1"), pending("v1", "v2")])).unwrap();
        assert_eq!(k2.canonical_key().unwrap(), named::k2().canonical_key().unwrap());
        let p3 = replay_bdh(&DefiningSequence::new(vec![initial("v1"), pending("v1", "v2"), twin("v2", "v3")]))
            .unwrap();
        assert_eq!(p3.class_a(), &["v1".to_string()]);
        assert_eq!(p3.degree(p3.index_of("v1").unwrap()), 2);
    }

    #[test]
    fn fan_sequence_matches_hand_replay() {
        // edge list replayed by hand
        let seq = DefiningSequence::new(vec![
            initial("s1"),
            pending("s1", "r1"),
            twin("r1", "r2"),
            pending("r2", "s2"),
            twin("r2", "r3"),
            pending("r3", "s3"),
        ]);
        let g = replay_bdh(&seq).unwrap();
        let mut edges = g.edge_labels();
        edges.sort();
        let expected: Vec<(String, String)> = [
            ("s1", "r1"), ("s1", "r2"), ("s1", "r3"), ("s2", "r2"), ("s2", "r3"), ("s3", "r3"),
        ]
        .iter()
        .map(|(x, y)| (x.to_string(), y.to_string()))
        .collect();
        assert_eq!(edges, expected);
    }

    #[test]
    fn dangling_and_malformed_sequences() {
        let bad = DefiningSequence::new(vec![initial("x"), pending("y", "z")]);
        assert!(matches!(replay_bdh(&bad), Err(Error::Input(_))));
        let dup = DefiningSequence::new(vec![initial("x"), pending("x", "x")]);
        assert!(replay_bdh(&dup).is_err());
        let lonely = DefiningSequence::new(vec![initial("x"), twin("x", "y")]);
        assert!(replay_bdh(&lonely).is_err());
    }

    #[test]
    fn recognition_examples() {
        assert!(bdh_recognize(&named::cycle(6)).unwrap().is_none());
        assert!(bdh_recognize(&named::domino()).unwrap().is_none());
        assert_eq!(bdh_recognize(&named::k2()).unwrap().unwrap().len(), 2);
        let disconnected = named::two_k2();
        assert!(matches!(bdh_recognize(&disconnected), Err(Error::Input(_))));
    }

    #[test]
    fn recognized_sequence_replays_to_the_same_labeled_graph() {
        for g in [named::path(5), named::star(4), named::complete(2, 3), named::arrow(), named::t2()] {
            let seq = bdh_recognize(&g).unwrap().unwrap();
            let h = replay_bdh(&seq).unwrap();
            assert!(h.same_labeled_graph(&g), "{g:?} vs {h:?}");
        }
    }

    #[test]
    fn forbidden_check() {
        assert!(bdh_check_forbidden(&named::path(6)).unwrap().free);
        let c8 = bdh_check_forbidden(&named::cycle(8)).unwrap();
        assert!(!c8.free);
        assert_eq!(c8.witness.unwrap().len(), 8);
        let d = bdh_check_forbidden(&named::domino()).unwrap();
        assert_eq!(d.pattern, Some(Pattern::Domino));
    }
}
