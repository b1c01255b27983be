//! Independent reference implementations ("oracles") used by the test
//! suites of the other crates in this workspace.
//!
//! Everything in here deliberately avoids the production crates and solves
//! the same problems by a different route, so that agreement between the two
//! is meaningful evidence of correctness:
//!
//! - [`smith_normal_form`]: elementary divisors of an integer matrix by
//!   textbook row/column reduction (cross-checks the symplectic normal form).
//! - [`local_isotropy`]: decides solvability of `z² = a·x² + b·y²` over a
//!   completion of ℚ by exhaustive residue search plus a Hensel-lifting
//!   certificate (cross-checks the closed-form Hilbert symbol).
//! - [`decimal_sign`]: sign of `p + q·√a` from a fixed-precision decimal
//!   enclosure built on a hand-rolled integer square root.
//! - [`cofactor_det`]: rational determinant by cofactor expansion
//!   (cross-checks elimination-based determinants on small matrices).

mod det;
mod enclosure;
mod isotropy;
mod snf;

pub use det::cofactor_det;
pub use enclosure::{decimal_enclosure, decimal_sign, isqrt};
pub use isotropy::{local_isotropy, Place};
pub use snf::smith_normal_form;
