//! Error type for the scalar ledger.

use thiserror::Error;

/// Precondition violations of the scalar identities.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LedgerError {
    /// A dimension parameter fell below its minimum.
    #[error("dimension must be at least {min}, got {got}")]
    DimensionTooSmall { min: u32, got: u32 },
    /// The base dimension must stay strictly below the total dimension.
    #[error("base dimension {n} must be smaller than the total dimension {m}")]
    BaseNotSmaller { n: u32, m: u32 },
    /// The base curve genus must be at least 2.
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u32),
}
