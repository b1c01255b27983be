use thiserror::Error;

/// Errors produced by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// Matrix shapes do not line up for the requested operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A square system has no unique solution; `rank` is the rank reached
    /// before elimination stalled.
    #[error("matrix is singular (rank {rank})")]
    Singular { rank: usize },

    /// An alternating form has a nontrivial kernel; `rank` is the rank of the
    /// form, always strictly less than its dimension.
    #[error("alternating form is degenerate (rank {rank})")]
    DegenerateForm { rank: usize },

    /// Textual input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// The input lies outside the mathematical domain of the operation
    /// (square root of a negative number, non-integral matrix entries, ...).
    #[error("{0}")]
    Domain(String),
}
