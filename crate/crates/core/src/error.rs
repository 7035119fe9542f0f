use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid theta specification ({l1},{l2},{l3}): {reason}")]
    InvalidTheta {
        l1: usize,
        l2: usize,
        l3: usize,
        reason: String,
    },

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid list assignment: {0}")]
    InvalidAssignment(String),

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("outside the domain of the formula: {0}")]
    Domain(String),

    #[error("budget exceeded: {what} would exceed the cap of {limit}")]
    BudgetExceeded { what: &'static str, limit: u64 },

    #[error("count overflowed 64 bits in {0}")]
    Overflow(&'static str),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
