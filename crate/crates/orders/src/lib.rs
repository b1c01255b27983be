//! Orders (unital subrings that are full lattices) in rational quaternion
//! algebras, and the group-theoretic bookkeeping their unit groups need.
//!
//! The centerpiece is [`QuatOrder`], a lattice given by four basis elements.
//! On top of it sit
//!
//! * [`verify_order`] — a checker that either confirms the ring axioms or
//!   returns a concrete witness of failure (a product that escapes the
//!   lattice, a non-integral trace, ...),
//! * [`reduced_discriminant`] / [`is_maximal`] — the lattice invariant that
//!   measures how far an order is from maximal, compared against the algebra
//!   discriminant,
//! * [`norm_one_search`] — exhaustive enumeration of norm-one units in a
//!   coordinate box, the raw material for group generators,
//! * [`element_type`] / [`torsion_certificate`] — trace-based classification
//!   of norm-one elements and a finite certificate of (non-)torsion,
//! * [`congruence_membership`] — the `gamma = 1 (mod N * O)` test,
//! * [`word_ball`] / [`torsion_screening`] — reduced words in a generating
//!   set up to a radius, screened for unexpected torsion.

mod order;
mod torsion;
mod words;

pub use order::{
    congruence_membership, is_maximal, norm_one_search, reduced_discriminant, verify_order,
    OrderError, OrderViolation, QuatOrder,
};
pub use torsion::{element_type, torsion_certificate, ElementType, TorsionCertificate};
pub use words::{format_word, torsion_screening, word_ball, Letter, TorsionScreen};
