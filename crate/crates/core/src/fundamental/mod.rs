//! Spanning trees, fundamental circuits and graphs, binary matroids, and the
//! realization of BDH graphs as fundamental graphs of SP graphs.

mod matroid;
mod transfer;
mod tree;

pub use matroid::{BinaryMatroid, StandardForm};
pub use transfer::{bdh_to_sp, two_isomorphic, MAX_TWO_ISO_EDGES};
pub(crate) use transfer::first_tree;
pub(crate) use tree::{fundamental_paths, UnionFind};
pub use tree::{
    fundamental_circuit, fundamental_graph, spanning_trees, FundamentalCircuit, SpanningTree, DEFAULT_TREE_CAP,
};
