//! Arborescence certificates for BDH graphs, DFS-tree orientations, and the
//! chain-graph / self-dual outerplanar characterization.

mod arborescence;
mod chain;
mod outerplanar;

pub use arborescence::{
    dfs_tree_check, supporting_arborescence, verify_certificate, Arborescence, DfsOrientation,
    SupportCertificate,
};
pub use chain::{
    balancedness_check, chain_graph_orbit_search, forbidden_quadruple_check, is_bisimplicial,
    is_chain_graph, Bisimplicial, ChainSearch,
};
pub use outerplanar::{selfdual_outerplanar_check, OuterplanarVerdict, OutplaneEmbedding, WeakDual};
