//! Maximum multiflows and minimum multicuts on 2-connected series-parallel
//! graphs whose nets form a spanning co-tree. Every net `f` has exactly one
//! admissible path, the tree path between its ends, so a multiflow is a
//! vector indexed by the nets.

mod simplex;

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize, Serializer};

use crate::construct::{bdh_recognize, sp_recognize};
use crate::error::{Error, Result};
use crate::fundamental::{fundamental_graph, fundamental_paths, SpanningTree};
use crate::gf2::Gf2Matrix;
use crate::graph::Multigraph;

pub use simplex::{solve, Lp, LpOutcome, Sense};

pub const MAX_LP_SIZE: usize = 20;
pub const MAX_ORACLE_NETS: usize = 10;
pub const MAX_ORACLE_CAPACITY: u64 = 6;

/// Host graph, spanning tree and a positive integer capacity per tree edge.
/// The nets are the co-tree edges.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "FlowInstanceJson", into = "FlowInstanceJson")]
pub struct FlowInstance {
    host: Multigraph,
    tree: SpanningTree,
    capacities: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlowInstanceJson {
    pub graph: Multigraph,
    pub tree: Vec<String>,
    pub capacities: BTreeMap<String, u64>,
}

impl TryFrom<FlowInstanceJson> for FlowInstance {
    type Error = Error;

    fn try_from(j: FlowInstanceJson) -> Result<Self> {
        let tree = SpanningTree::new(&j.graph, &j.tree)?;
        FlowInstance::new(j.graph, tree, j.capacities)
    }
}

impl From<FlowInstance> for FlowInstanceJson {
    fn from(f: FlowInstance) -> Self {
        FlowInstanceJson {
            graph: f.host,
            tree: f.tree.edges().to_vec(),
            capacities: f.capacities,
        }
    }
}

impl FlowInstance {
    pub fn new(host: Multigraph, tree: SpanningTree, capacities: BTreeMap<String, u64>) -> Result<Self> {
        if !host.is_two_connected() {
            return Err(Error::input("the host graph must be 2-connected"));
        }
        let tree = SpanningTree::new(&host, tree.edges())?;
        if sp_recognize(&host)?.is_none() {
            return Err(Error::input("the host graph is not series-parallel"));
        }
        for e in tree.edges() {
            match capacities.get(e) {
                None => return Err(Error::input(format!("tree edge {e} has no capacity"))),
                Some(0) => return Err(Error::input(format!("capacity of {e} must be positive"))),
                Some(_) => {}
            }
        }
        if let Some(extra) = capacities.keys().find(|k| !tree.contains(k)) {
            return Err(Error::input(format!("capacity given for non-tree edge {extra}")));
        }
        Ok(FlowInstance { host, tree, capacities })
    }

    /// Every tree edge gets capacity `w`.
    pub fn uniform(host: Multigraph, tree: SpanningTree, w: u64) -> Result<Self> {
        let caps = tree.edges().iter().map(|e| (e.clone(), w)).collect();
        Self::new(host, tree, caps)
    }

    pub fn host(&self) -> &Multigraph {
        &self.host
    }

    pub fn tree(&self) -> &SpanningTree {
        &self.tree
    }

    pub fn capacities(&self) -> &BTreeMap<String, u64> {
        &self.capacities
    }

    pub fn nets(&self) -> Vec<String> {
        self.tree.cotree(&self.host).expect("tree validated against host")
    }
}

/// Rows are nets, columns tree edges; an entry is one when the tree edge lies
/// on the net's path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathMatrix {
    pub nets: Vec<String>,
    pub tree_edges: Vec<String>,
    pub matrix: Gf2Matrix,
}

impl PathMatrix {
    fn capacities(&self, inst: &FlowInstance) -> Vec<u64> {
        self.tree_edges.iter().map(|e| inst.capacities[e]).collect()
    }

    /// Tree edge columns on the path of net `r`.
    fn path(&self, r: usize) -> Vec<usize> {
        (0..self.tree_edges.len()).filter(|&c| self.matrix.get(r, c)).collect()
    }
}

pub fn path_matrix(inst: &FlowInstance) -> Result<PathMatrix> {
    let host = &inst.host;
    let tree_edges: Vec<String> = host
        .edges()
        .iter()
        .filter(|e| inst.tree.contains(&e.id))
        .map(|e| e.id.clone())
        .collect();
    let col: BTreeMap<&str, usize> = tree_edges.iter().enumerate().map(|(j, e)| (e.as_str(), j)).collect();
    let paths = fundamental_paths(host, &inst.tree)?;
    let mut matrix = Gf2Matrix::zeros(paths.len(), tree_edges.len());
    let mut nets = Vec::with_capacity(paths.len());
    for (r, (f, path)) in paths.iter().enumerate() {
        nets.push(host.edge(*f).id.clone());
        for &k in path {
            matrix.set(r, col[host.edge(k).id.as_str()], true);
        }
    }
    let g = fundamental_graph(host, &inst.tree)?;
    if g.class_a() != tree_edges.as_slice() || g.class_b() != nets.as_slice() || g.adjacency().transpose() != matrix {
        return Err(Error::internal("path matrix disagrees with the fundamental graph"));
    }
    Ok(PathMatrix { nets, tree_edges, matrix })
}

fn guard(pm: &PathMatrix) -> Result<()> {
    if pm.nets.len() > MAX_LP_SIZE || pm.tree_edges.len() > MAX_LP_SIZE {
        return Err(Error::capacity(format!(
            "flow instances are limited to {MAX_LP_SIZE} nets and {MAX_LP_SIZE} tree edges"
        )));
    }
    Ok(())
}

/// Optimal solutions of `max 1·x, Ax <= w, x >= 0` and of its dual
/// `min w·y, Aᵀy >= 1, y >= 0`, where `A` is the path matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct LpPair {
    /// per net
    pub primal: Vec<BigRational>,
    /// per tree edge
    pub dual: Vec<BigRational>,
    pub value: BigRational,
}

fn q(n: u64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn solve_lp_pair(inst: &FlowInstance) -> Result<LpPair> {
    let pm = path_matrix(inst)?;
    guard(&pm)?;
    lp_pair(&pm, &pm.capacities(inst))
}

fn lp_pair(pm: &PathMatrix, w: &[u64]) -> Result<LpPair> {
    let (nn, nt) = (pm.nets.len(), pm.tree_edges.len());
    let bit = |r: usize, c: usize| if pm.matrix.get(r, c) { q(1) } else { q(0) };
    let primal = Lp {
        c: vec![q(1); nn],
        rows: (0..nt).map(|c| ((0..nn).map(|r| bit(r, c)).collect(), Sense::Le, q(w[c]))).collect(),
    };
    let dual = Lp {
        c: w.iter().map(|&x| -q(x)).collect(),
        rows: (0..nn).map(|r| ((0..nt).map(|c| bit(r, c)).collect(), Sense::Ge, q(1))).collect(),
    };
    let (x, v1) = match solve(&primal) {
        LpOutcome::Optimal { x, value } => (x, value),
        other => return Err(Error::internal(format!("flow LP ended as {other:?}"))),
    };
    let (y, v2) = match solve(&dual) {
        LpOutcome::Optimal { x, value } => (x, -value),
        other => return Err(Error::internal(format!("cut LP ended as {other:?}"))),
    };
    if v1 != v2 {
        return Err(Error::internal(format!("LP duality gap: {v1} vs {v2}")));
    }
    Ok(LpPair { primal: x, dual: y, value: v1 })
}

fn ratio_str<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ratio_map<S: Serializer>(v: &BTreeMap<String, BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(v.iter().map(|(k, x)| (k, x.to_string())))
}

/// Integral multiflow and multicut of equal value, with the LP solutions
/// they were checked against. Rationals serialize as `"p/q"` strings.
#[derive(Debug, Clone, Serialize)]
pub struct FlowCertificate {
    pub flow: BTreeMap<String, u64>,
    pub cut: Vec<String>,
    #[serde(serialize_with = "ratio_str")]
    pub lp_value: BigRational,
    pub flow_value: u64,
    pub cut_capacity: u64,
    /// every net carries at most one unit
    pub flow_is_simple: bool,
    #[serde(serialize_with = "ratio_map")]
    pub lp_primal: BTreeMap<String, BigRational>,
    #[serde(serialize_with = "ratio_map")]
    pub lp_dual: BTreeMap<String, BigRational>,
}

pub fn integral_certificates(inst: &FlowInstance) -> Result<FlowCertificate> {
    let pm = path_matrix(inst)?;
    guard(&pm)?;
    let w = pm.capacities(inst);
    let lp = lp_pair(&pm, &w)?;
    if !lp.value.is_integer() {
        return Err(Error::internal(format!("fractional LP optimum {}", lp.value)));
    }
    let target = lp.value.to_integer().to_u64().ok_or_else(|| Error::internal("LP value out of range"))?;
    let paths: Vec<Vec<usize>> = (0..pm.nets.len()).map(|r| pm.path(r)).collect();
    let lambda = integral_flow(&paths, &w, target)
        .ok_or_else(|| Error::internal(format!("no integral flow of value {target}")))?;
    let cut = integral_cut(&paths, &w, target)
        .ok_or_else(|| Error::internal(format!("no multicut of capacity {target}")))?;
    let cut_capacity: u64 = cut.iter().map(|&c| w[c]).sum();
    let flow_value: u64 = lambda.iter().sum();
    if flow_value != cut_capacity {
        return Err(Error::internal("flow and cut values differ"));
    }
    Ok(FlowCertificate {
        flow: pm.nets.iter().cloned().zip(lambda.iter().copied()).collect(),
        cut: cut.iter().map(|&c| pm.tree_edges[c].clone()).collect(),
        flow_value,
        cut_capacity,
        flow_is_simple: lambda.iter().all(|&l| l <= 1),
        lp_primal: pm.nets.iter().cloned().zip(lp.primal).collect(),
        lp_dual: pm.tree_edges.iter().cloned().zip(lp.dual).collect(),
        lp_value: lp.value,
    })
}

/// Depth-first search for an integral flow of value `target`, larger
/// amounts first, pruned by the residual capacity still reachable.
fn integral_flow(paths: &[Vec<usize>], w: &[u64], target: u64) -> Option<Vec<u64>> {
    fn go(paths: &[Vec<usize>], k: usize, residual: &mut [u64], lambda: &mut [u64], have: u64, target: u64) -> bool {
        if have == target {
            return true;
        }
        if k == paths.len() {
            return false;
        }
        // optimistic: each remaining net alone
        let bound: u64 = paths[k..].iter().map(|p| p.iter().map(|&c| residual[c]).min().unwrap_or(0)).sum();
        if have + bound < target {
            return false;
        }
        let room = paths[k].iter().map(|&c| residual[c]).min().unwrap_or(0).min(target - have);
        for amount in (0..=room).rev() {
            for &c in &paths[k] {
                residual[c] -= amount;
            }
            lambda[k] = amount;
            if go(paths, k + 1, residual, lambda, have + amount, target) {
                return true;
            }
            for &c in &paths[k] {
                residual[c] += amount;
            }
        }
        lambda[k] = 0;
        false
    }
    let mut residual = w.to_vec();
    let mut lambda = vec![0; paths.len()];
    go(paths, 0, &mut residual, &mut lambda, 0, target).then_some(lambda)
}

/// Branches on the edges of the first net whose path the cut misses,
/// keeping the capacity within `budget`.
fn integral_cut(paths: &[Vec<usize>], w: &[u64], budget: u64) -> Option<Vec<usize>> {
    fn go(paths: &[Vec<usize>], w: &[u64], chosen: &mut Vec<usize>, spent: u64, budget: u64) -> bool {
        let Some(p) = paths.iter().find(|p| !p.iter().any(|c| chosen.contains(c))) else {
            return true;
        };
        for &c in p {
            if spent + w[c] <= budget {
                chosen.push(c);
                if go(paths, w, chosen, spent + w[c], budget) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    go(paths, w, &mut chosen, 0, budget).then(|| {
        chosen.sort_unstable();
        chosen
    })
}

/// Exhaustive optima `(max integral flow, min multicut capacity)`, for
/// cross-checking the LP route.
pub fn brute_force_oracle(inst: &FlowInstance) -> Result<(u64, u64)> {
    let pm = path_matrix(inst)?;
    let w = pm.capacities(inst);
    if pm.nets.len() > MAX_ORACLE_NETS || w.iter().any(|&x| x > MAX_ORACLE_CAPACITY) || pm.tree_edges.len() > MAX_LP_SIZE {
        return Err(Error::capacity(format!(
            "the oracle handles at most {MAX_ORACLE_NETS} nets with capacities up to {MAX_ORACLE_CAPACITY}"
        )));
    }
    let paths: Vec<Vec<usize>> = (0..pm.nets.len()).map(|r| pm.path(r)).collect();
    let max_w = w.iter().copied().max().unwrap_or(0);

    fn best(paths: &[Vec<usize>], k: usize, load: &mut [u64], w: &[u64], max_w: u64) -> u64 {
        if k == paths.len() {
            return 0;
        }
        let mut out = 0;
        for amount in 0..=max_w {
            if paths[k].iter().any(|&c| load[c] + amount > w[c]) {
                break;
            }
            for &c in &paths[k] {
                load[c] += amount;
            }
            out = out.max(amount + best(paths, k + 1, load, w, max_w));
            for &c in &paths[k] {
                load[c] -= amount;
            }
        }
        out
    }
    let flow = best(&paths, 0, &mut vec![0; w.len()], &w, max_w);

    let t = w.len();
    let masks: Vec<u64> = paths.iter().map(|p| p.iter().fold(0u64, |m, &c| m | 1 << c)).collect();
    let cut = (0u64..1 << t)
        .filter(|s| masks.iter().all(|m| m & s != 0))
        .map(|s| (0..t).filter(|&c| s >> c & 1 == 1).map(|c| w[c]).sum::<u64>())
        .min()
        .unwrap_or(0);
    Ok((flow, cut))
}

/// True when the path matrix's incidence graph is BDH.
pub fn path_matrix_is_bdh(inst: &FlowInstance) -> Result<bool> {
    let g = fundamental_graph(&inst.host, &inst.tree)?;
    Ok(bdh_recognize(&g)?.is_some())
}

/// Checks capacity constraints of a flow exactly.
pub fn flow_respects_capacities(inst: &FlowInstance, flow: &BTreeMap<String, u64>) -> Result<bool> {
    let pm = path_matrix(inst)?;
    let w = pm.capacities(inst);
    let mut load = vec![0u64; w.len()];
    for (r, net) in pm.nets.iter().enumerate() {
        let amount = *flow.get(net).ok_or_else(|| Error::input(format!("no flow on net {net}")))?;
        for c in pm.path(r) {
            load[c] += amount;
        }
    }
    Ok(load.iter().zip(&w).all(|(l, c)| l <= c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> (Multigraph, SpanningTree) {
        // 1-2-3-4 path as the tree, nets 13 and 14
        let h = Multigraph::new(
            4,
            vec![
                crate::graph::Edge::new("12", 0, 1),
                crate::graph::Edge::new("23", 1, 2),
                crate::graph::Edge::new("34", 2, 3),
                crate::graph::Edge::new("13", 0, 2),
                crate::graph::Edge::new("14", 0, 3),
            ],
        )
        .unwrap();
        let t = SpanningTree::new(&h, &["12", "23", "34"]).unwrap();
        (h, t)
    }

    #[test]
    fn triangle_instance() {
        let h = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = SpanningTree::new(&h, &["e1", "e2"]).unwrap();
        let inst = FlowInstance::uniform(h, t, 1).unwrap();
        let pm = path_matrix(&inst).unwrap();
        assert_eq!((pm.matrix.rows(), pm.matrix.cols()), (1, 2));
        assert!(pm.matrix.get(0, 0) && pm.matrix.get(0, 1));
        let cert = integral_certificates(&inst).unwrap();
        assert_eq!(cert.lp_value, q(1));
        assert_eq!(cert.flow["e3"], 1);
        assert_eq!(cert.cut.len(), 1);
        assert_eq!(brute_force_oracle(&inst).unwrap(), (1, 1));
    }

    #[test]
    fn diamond_instance() {
        let (h, t) = diamond();
        let inst = FlowInstance::uniform(h.clone(), t.clone(), 1).unwrap();
        let pm = path_matrix(&inst).unwrap();
        let rows: Vec<Vec<bool>> = (0..2).map(|r| (0..3).map(|c| pm.matrix.get(r, c)).collect()).collect();
        assert_eq!(pm.nets, vec!["13", "14"]);
        assert_eq!(rows, vec![vec![true, true, false], vec![true, true, true]]);
        let cert = integral_certificates(&inst).unwrap();
        assert_eq!((cert.flow_value, cert.cut_capacity), (1, 1));
        assert!(cert.cut == vec!["12".to_string()] || cert.cut == vec!["23".to_string()]);
        assert_eq!(brute_force_oracle(&inst).unwrap(), (1, 1));

        let caps = BTreeMap::from([("12".to_string(), 2), ("23".to_string(), 1), ("34".to_string(), 1)]);
        let inst = FlowInstance::new(h, t, caps).unwrap();
        assert_eq!(solve_lp_pair(&inst).unwrap().value, q(1));
    }

    #[test]
    fn invalid_instances() {
        let (h, t) = diamond();
        assert!(FlowInstance::uniform(h.clone(), t.clone(), 0).is_err());
        let caps = BTreeMap::from([("12".to_string(), 1)]);
        assert!(FlowInstance::new(h, t, caps).is_err());
        let k4 = Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let t = SpanningTree::new(&k4, &["e1", "e2", "e3"]).unwrap();
        assert!(matches!(FlowInstance::uniform(k4, t, 1), Err(Error::Input(_))));
    }

    #[test]
    fn json_round_trip() {
        let (h, t) = diamond();
        let inst = FlowInstance::uniform(h, t, 2).unwrap();
        let s = serde_json::to_string(&inst).unwrap();
        let back: FlowInstance = serde_json::from_str(&s).unwrap();
        assert_eq!(back.nets(), inst.nets());
        let cert = serde_json::to_value(integral_certificates(&inst).unwrap()).unwrap();
        assert_eq!(cert["lp_value"], "2");
    }
}
