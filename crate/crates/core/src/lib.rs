pub mod cli;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod fundamental;
pub mod gf2;
pub mod graph;
pub mod multiflow;
pub mod pivot;
pub mod poly;
pub mod structure;

pub use error::{Error, Result};
pub use gf2::Gf2Matrix;
pub use graph::{BipartiteGraph, CanonicalForm, CanonicalKey, DoubleOccurrenceWord, Edge, Multigraph, Side};
