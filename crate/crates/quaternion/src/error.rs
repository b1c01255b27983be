use exact_core::ExactError;
use num_bigint::BigInt;
use thiserror::Error;

/// Errors from quaternion-algebra computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuatError {
    /// An algebra parameter that must be nonzero was zero.
    #[error("algebra parameter {0} must be nonzero")]
    ZeroParameter(&'static str),

    /// A finite place was given with a non-prime modulus.
    #[error("{0} is not prime")]
    NotPrime(BigInt),

    /// The requested construction needs `x^2 = a` with `a > 0`.
    #[error("matrix embedding needs a positive first parameter, got a = {a}; {hint}")]
    IndefinitePresentationNeeded {
        /// The offending value of `a`.
        a: String,
        /// How to re-present the algebra, when possible.
        hint: String,
    },

    /// Field degree outside the supported range.
    #[error("field degree must be between 1 and 62, got {0}")]
    DegreeOutOfRange(u64),

    /// Division by a non-invertible element.
    #[error("element is not invertible (reduced norm zero)")]
    NotInvertible,

    /// Propagated exact-arithmetic error.
    #[error(transparent)]
    Exact(#[from] ExactError),
}
