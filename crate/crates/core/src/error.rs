use thiserror::Error;

/// Largest number of qubits any gate, vector or matrix may carry.
pub const MAX_QUBITS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    #[error("dimension too large: {what} needs n <= {limit}, got {n}")]
    DimensionTooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("unsupported gate: {0}")]
    UnsupportedGate(String),

    #[error("integer overflow in exact matrix arithmetic")]
    IntegerOverflow,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::PreconditionViolated(msg.into())
}

pub(crate) fn invariant(msg: impl Into<String>) -> Error {
    Error::InternalInvariant(msg.into())
}
