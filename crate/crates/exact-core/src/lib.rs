//! Exact arithmetic foundation for the rest of the workspace.
//!
//! Everything in this crate computes with arbitrary-precision integers and
//! rationals; there is no floating point anywhere.  The building blocks are
//!
//! * [`Rational`] — arbitrary-precision rationals with `"p/q"` parsing,
//! * [`QuadScalar`] — exact elements `p + q*sqrt(d)` of a real quadratic field,
//! * [`ComplexExactScalar`] — complex numbers over those scalars,
//! * [`Matrix`] — dense matrices over any exact field scalar, with fraction-free
//!   style Gaussian elimination for solving, determinants and inverses,
//! * [`symplectic_frobenius_basis`] — a symplectic analogue of the Smith normal
//!   form for integral alternating forms,
//! * [`RatInterval`] — rational interval arithmetic used as a certified fallback
//!   when a value escapes the quadratic field (for example an irrational base
//!   point on the upper half plane).
//!
//! Comparisons and sign decisions on [`QuadScalar`] are exact: the sign of
//! `p + q*sqrt(d)` is resolved by comparing `p^2` against `q^2 d`, never by
//! approximation.

mod arith;
mod complex;
mod error;
mod interval;
mod matrix;
mod quad;
mod rational;
mod symplectic;

pub use arith::{factor, factor_u64, is_prime, squarefree_decompose};
pub use complex::ComplexExactScalar;
pub use error::ExactError;
pub use interval::{ComplexInterval, RatInterval};
pub use matrix::{exact_linear_solve, Matrix, Scalar};
pub use quad::{qf_sign, QuadScalar};
pub use rational::{
    denominator_lcm, format_rational, is_integer, parse_rational, rat, ratio, Rational,
};
pub use symplectic::symplectic_frobenius_basis;
