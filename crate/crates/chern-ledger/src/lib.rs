//! Exact scalar shadows of the cohomological identities satisfied by
//! fibered families of abelian varieties: the proportionality of Chern
//! classes on ball quotients, the second Chern inequality in its equality
//! case, the relative canonical factors of a fibration, the Arakelov gap
//! over a curve, and the slope comparison forcing a one-dimensional base.
//!
//! The module works with the numbers these identities reduce to, never
//! with the classes themselves: every function takes and returns exact
//! rationals, and a zero gap certifies only the scalar identity.

mod error;
mod fibration;
mod profile;

pub use error::LedgerError;
pub use fibration::{
    arakelov_gap, relative_canonical_factors, slope_forces_curve, FibrationProfile,
};
pub use profile::{chen_ogiue_gap, chern_profile, ChernProfile};
