use thiserror::Error;

use crate::pivot::Orbit;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input (unknown label, dangling reference, bad JSON).
    #[error("input error: {0}")]
    Input(String),

    /// An operation was called outside its precondition (non-edge pivot, non-interlaced pair).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The input lies outside the class the operation is defined on. The witness
    /// lists the vertex labels of a forbidden induced subgraph when one is known.
    #[error("domain error: {message}")]
    Domain {
        message: String,
        witness: Option<Vec<String>>,
    },

    /// A desk-scale size guard was exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Orbit enumeration hit its member cap; the partial orbit is attached.
    #[error("orbit cap of {cap} members exceeded")]
    OrbitCap { cap: usize, partial: Box<Orbit> },

    /// An internal invariant failed. Reaching this means a structural fact the
    /// implementation relies on was contradicted by a computed example.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Short machine-readable tag, used by the CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Input(_) => "input",
            Error::Precondition(_) => "precondition",
            Error::Domain { .. } => "domain",
            Error::Capacity(_) | Error::OrbitCap { .. } => "capacity",
            Error::Internal(_) => "internal",
        }
    }
}
