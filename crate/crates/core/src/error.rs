use thiserror::Error;

/// Errors raised anywhere in the certificate engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph6 input. `offset` is the byte position of the problem.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// An argument violated an operation's precondition.
    #[error("{0}")]
    Domain(String),

    /// Vectors or matrices of incompatible shape.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// The request exceeds a configured size cap.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A produced certificate failed symbolic re-verification.
    #[error("internal soundness check failed: {0}")]
    Unsound(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
