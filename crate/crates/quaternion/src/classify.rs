//! Ramification sets, algebra classification, and the archimedean type of
//! corestrictions from totally real fields.

use exact_core::{factor, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::QuatError;
use crate::hilbert::{hilbert_symbol, Place};

/// Computes the ramification set of the algebra `(a, b)`: the places where
/// the Hilbert symbol is `-1`, sorted with finite primes ascending and the
/// real place last.
///
/// Only places dividing `2ab` (and the real place) can ramify, so those are
/// the only candidates examined.  The result always has even cardinality.
pub fn ramification_set(a: &Rational, b: &Rational) -> Result<Vec<Place>, QuatError> {
    if a.is_zero() {
        return Err(QuatError::ZeroParameter("a"));
    }
    if b.is_zero() {
        return Err(QuatError::ZeroParameter("b"));
    }
    let mut candidates = vec![BigInt::from(2)];
    for value in [a, b] {
        let as_int = value.numer() * value.denom();
        for (p, _) in factor(&as_int) {
            if !candidates.contains(&p) {
                candidates.push(p);
            }
        }
    }
    candidates.sort();

    let mut ramified = Vec::new();
    for p in candidates {
        let place = Place::Prime(p);
        if hilbert_symbol(a, b, &place)? == -1 {
            ramified.push(place);
        }
    }
    if hilbert_symbol(a, b, &Place::Infinity)? == -1 {
        ramified.push(Place::Infinity);
    }
    debug_assert!(ramified.len() % 2 == 0, "ramification set has odd size");
    Ok(ramified)
}

/// Classification of a rational quaternion algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraClass {
    /// Ramified places, finite primes ascending, real place last.
    pub ramified: Vec<Place>,
    /// True for a division algebra (some place ramifies); false means the
    /// algebra is isomorphic to 2x2 matrices over `Q`.
    pub division: bool,
    /// True when the real place ramifies (the algebra tensored with `R` is
    /// the Hamilton quaternions).
    pub definite: bool,
    /// Product of the finite ramified primes (1 for the split algebra).
    pub discriminant: BigInt,
}

/// Classifies `(a, b)`: division or matrix algebra, definite or indefinite,
/// together with the ramified places and the algebra discriminant.
pub fn classify_algebra(a: &Rational, b: &Rational) -> Result<AlgebraClass, QuatError> {
    let ramified = ramification_set(a, b)?;
    let definite = ramified.contains(&Place::Infinity);
    let discriminant = ramified
        .iter()
        .filter_map(|place| match place {
            Place::Prime(p) => Some(p),
            Place::Infinity => None,
        })
        .fold(BigInt::one(), |acc, p| acc * p);
    Ok(AlgebraClass {
        division: !ramified.is_empty(),
        definite,
        ramified,
        discriminant,
    })
}

/// The matrix algebra over `R` or over the Hamilton quaternions `H` that the
/// corestriction to `Q` of a quaternion algebra lands in after tensoring
/// with `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorestrictionType {
    /// `M_size(R)`.
    MatrixReal {
        /// Matrix size, `2^d`.
        size: u64,
    },
    /// `M_size(H)` over the Hamilton quaternions.
    MatrixHamiltonian {
        /// Matrix size, `2^(d-1)`.
        size: u64,
    },
}

impl CorestrictionType {
    /// True when a rational quaternion algebra in the same Brauer class is
    /// indefinite (the real place does not ramify).
    pub fn indefinite_quaternion_class(&self) -> bool {
        matches!(self, CorestrictionType::MatrixReal { .. })
    }
}

/// Archimedean type of the corestriction to `Q` of a quaternion algebra over
/// a totally real field of degree `d` that is split at exactly one real place
/// (the configuration whose unit groups act on the upper half plane).
///
/// Tensored with `R` the corestriction is
/// `M_2(R) (x) H^(x)(d-1)`, and since `H (x) H = M_4(R)` this collapses to
/// `M_(2^d)(R)` for odd `d` and `M_(2^(d-1))(H)` for even `d`.  In
/// particular a rational quaternion algebra in the Brauer class of the
/// corestriction is indefinite exactly when `d` is odd.
pub fn archimedean_corestriction(degree: u64) -> Result<CorestrictionType, QuatError> {
    if degree == 0 || degree > 62 {
        return Err(QuatError::DegreeOutOfRange(degree));
    }
    if degree % 2 == 1 {
        Ok(CorestrictionType::MatrixReal {
            size: 1u64 << degree,
        })
    } else {
        Ok(CorestrictionType::MatrixHamiltonian {
            size: 1u64 << (degree - 1),
        })
    }
}
