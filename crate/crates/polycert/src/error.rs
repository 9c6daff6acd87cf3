//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Family constructions require `n >= 3`.
    #[error("parameter n must be at least 3, got {0}")]
    ParameterTooSmall(usize),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("element order exceeds cap {0}")]
    OrderExceedsCap(usize),

    #[error("closure exceeded the element cap {0}")]
    ClosureExceedsCap(usize),

    #[error("subgroup elements are not contained in the group")]
    NotASubgroup,

    #[error("group order {got} does not match the expected order {expected}")]
    OrderMismatch { expected: u64, got: u64 },

    #[error("operation requires a rank-{expected} system, got rank {got}")]
    WrongRank { expected: usize, got: usize },

    /// Coset enumeration ran out of room. Inconclusive, not a disproof.
    #[error("coset enumeration overflowed the cap of {0} cosets")]
    Overflow(usize),

    #[error("lattice isomorphism search budget of {0} nodes exceeded")]
    SearchBudgetExceeded(u64),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("export infeasible: {0}")]
    ExportInfeasible(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
