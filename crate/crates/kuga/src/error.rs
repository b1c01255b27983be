//! Error type for fiber-space assembly and certification.

use exact_core::ExactError;
use orders::OrderError;
use quaternion::QuatError;
use thiserror::Error;

/// Errors raised while assembling or evaluating fiber-space data.
#[derive(Debug, Error)]
pub enum KugaError {
    /// Matrix or vector shapes do not match the declared fiber dimension.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// A base point left the open upper half plane.
    #[error("tau = {0} is not in the upper half plane")]
    TauNotInUpperHalfPlane(String),
    /// A quaternion expected to lie in the norm-one group does not.
    #[error("element has reduced norm {0}, expected 1")]
    NotNormOne(String),
    /// A translation part lies outside the integral lattice.
    #[error("matrix is not in the integral span of the lattice generators: {0}")]
    OutsideLattice(String),
    /// Exact arithmetic would need to mix two different quadratic fields.
    #[error("values live in incompatible quadratic fields: {0}")]
    MixedFields(String),
    /// The representation cannot be evaluated on the given group element.
    #[error("no representation image available for {0}")]
    UnresolvedRepresentation(String),
    /// The quaternion algebra fails a structural precondition.
    #[error("unsuitable algebra: {reason} (hint: {hint})")]
    UnsuitableAlgebra {
        /// What went wrong.
        reason: String,
        /// A suggested change of presentation.
        hint: String,
    },
    /// Congruence level too small to rule out torsion.
    #[error("level {0} < 3 risks torsion in the family group")]
    LevelTooSmall(u64),
    /// The fiber vectors fail to span the real fiber space.
    #[error("degenerate fiber lattice: {0}")]
    DegenerateLattice(String),
    /// A verified period relation does not hold, signaling inconsistent data.
    #[error("period relation violated: {0}")]
    PeriodRelations(String),
    /// A claimed order fails one of the order axioms.
    #[error("not an order: {0}")]
    NotAnOrder(String),
    /// Word-ball screening found a finite-order element.
    #[error("generators fail torsion screening: word {word} has order {order}")]
    TorsionInGenerators {
        /// The offending word, rendered.
        word: String,
        /// Its finite order.
        order: u32,
    },
    /// Propagated quaternion-algebra error.
    #[error(transparent)]
    Quat(#[from] QuatError),
    /// Propagated order-arithmetic error.
    #[error(transparent)]
    Order(#[from] OrderError),
    /// Propagated exact-arithmetic error.
    #[error(transparent)]
    Exact(#[from] ExactError),
}
