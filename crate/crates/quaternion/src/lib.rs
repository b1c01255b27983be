//! Quaternion algebras over the rationals.
//!
//! An algebra is presented by two nonzero rational parameters `(a, b)`: it is
//! spanned by `1, x, y, xy` with `x^2 = a`, `y^2 = b` and `yx = -xy`.  The
//! crate provides
//!
//! * exact element arithmetic, conjugation, reduced trace and norm,
//! * Hilbert symbols at every place of `Q` via the classical closed formulas,
//! * the ramification set and the split/division + definite/indefinite
//!   classification that falls out of it,
//! * the archimedean type of the corestriction of a quaternion algebra over a
//!   totally real field that is split at exactly one real place,
//! * an exact embedding into 2x2 matrices over `Q(sqrt(a))` for `a > 0`, and
//!   conjugation written as a rational 4x4 matrix in the algebra basis.
//!
//! All arithmetic is exact; Hilbert symbols are computed from closed formulas
//! whose only inputs are valuations and quadratic residue symbols.

mod algebra;
mod classify;
mod embedding;
mod error;
mod hilbert;

pub use algebra::{Quaternion, QuaternionAlgebra};
pub use classify::{
    archimedean_corestriction, classify_algebra, ramification_set, AlgebraClass,
    CorestrictionType,
};
pub use embedding::{conjugation_matrix_form, coords_in_basis, MatrixEmbedding};
pub use error::QuatError;
pub use hilbert::{hilbert_symbol, legendre_symbol, Place};
