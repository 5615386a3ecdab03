//! Graph, matrix and word types shared by every other module.

mod bipartite;
pub mod canon;
mod labeled;
mod multigraph;
pub mod named;
pub mod patterns;
mod word;

pub use bipartite::{BipartiteGraph, BipartiteJson, Side};
pub use canon::{CanonicalForm, CanonicalKey, MAX_CANON_VERTICES};
pub use labeled::LabeledGraph;
pub use multigraph::{Edge, Multigraph, MultigraphJson};
pub use patterns::{find_induced, hole_lengths, Pattern};
pub use word::DoubleOccurrenceWord;
