//! Scalar identities of an abelian-scheme fibration over a base of smaller
//! dimension: the relative canonical factors, the Arakelov gap over a
//! curve, and the slope comparison that forces the base to be a curve.

use exact_core::Rational;
use num_bigint::BigInt;

use crate::error::LedgerError;

/// Numeric data of a fibration: total dimension, base dimension, degree of
/// the Hodge bundle, and the genus of the base curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationProfile {
    m: u32,
    n: u32,
    deg_e: Rational,
    genus: u32,
}

impl FibrationProfile {
    /// Validates `0 < n < m` and `genus >= 2`.
    pub fn new(m: u32, n: u32, deg_e: Rational, genus: u32) -> Result<Self, LedgerError> {
        if n == 0 {
            return Err(LedgerError::DimensionTooSmall { min: 1, got: n });
        }
        if n >= m {
            return Err(LedgerError::BaseNotSmaller { n, m });
        }
        if genus < 2 {
            return Err(LedgerError::GenusTooSmall(genus));
        }
        Ok(FibrationProfile { m, n, deg_e, genus })
    }

    /// The total dimension.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// The base dimension.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The degree of the Hodge bundle.
    pub fn deg_e(&self) -> &Rational {
        &self.deg_e
    }

    /// The genus of the base curve.
    pub fn genus(&self) -> u32 {
        self.genus
    }
}

/// The factors `(m-n)/(n+1)` and `(m+1)/(n+1)` expressing the Hodge-bundle
/// degree and the total canonical class through the base canonical class.
pub fn relative_canonical_factors(m: u32, n: u32) -> Result<(Rational, Rational), LedgerError> {
    if n >= m {
        return Err(LedgerError::BaseNotSmaller { n, m });
    }
    let denom = BigInt::from(n + 1);
    let deg_e_factor = Rational::new(BigInt::from(m - n), denom.clone());
    let canonical_factor = Rational::new(BigInt::from(m + 1), denom);
    Ok((deg_e_factor, canonical_factor))
}

/// The gap `(m-1)(2 genus - 2) - 2 deg E`; zero in the extremal case where
/// the Hodge-bundle degree meets the Arakelov bound, negative only on
/// inconsistent input data.
pub fn arakelov_gap(profile: &FibrationProfile) -> Rational {
    let slack = Rational::from_integer(BigInt::from(
        (profile.m as i64 - 1) * (2 * profile.genus as i64 - 2),
    ));
    let two = Rational::from_integer(BigInt::from(2));
    slack - two * &profile.deg_e
}

/// Both sides of the slope comparison `2/(n+1)` against `1/n`, and whether
/// they are equal; equality singles out a one-dimensional base.
pub fn slope_forces_curve(n: u32) -> Result<(Rational, Rational, bool), LedgerError> {
    if n == 0 {
        return Err(LedgerError::DimensionTooSmall { min: 1, got: 0 });
    }
    let lhs = Rational::new(BigInt::from(2), BigInt::from(n + 1));
    let rhs = Rational::new(BigInt::from(1), BigInt::from(n));
    let equal = lhs == rhs;
    Ok((lhs, rhs, equal))
}
