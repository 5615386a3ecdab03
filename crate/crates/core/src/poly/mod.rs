//! Exact Tutte and interlace polynomials.

mod interlace;
mod polynomial;
mod tutte;

pub use interlace::{
    gamma, interlace, interlace_graph, interlace_nullity, verify_identity, IdentityReport, MAX_INTERLACE_VERTICES,
};
pub use polynomial::{Polynomial1V, Polynomial2V};
pub use tutte::{beta, tutte_graph, tutte_matroid, MAX_MATROID_ELEMENTS, MAX_TUTTE_EDGES};
