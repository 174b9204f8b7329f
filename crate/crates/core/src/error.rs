use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Two objects that must have matching sizes do not.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// The request exceeds a configured enumeration or size bound.
    #[error("capacity exceeded for {what}: {requested} > {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        requested: usize,
    },

    /// Preconditions of an operation are violated.
    #[error("usage error: {0}")]
    Usage(String),

    /// Malformed external input (graph files, JSON payloads).
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn dimension(expected: usize, found: usize) -> Self {
        Error::Dimension { expected, found }
    }
}
