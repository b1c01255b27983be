//! Trace classification and finite torsion certificates for norm-one
//! elements.

use std::fmt;

use exact_core::rat;
use num_traits::Signed;
use quaternion::Quaternion;

use crate::order::OrderError;

/// Conjugacy type of a norm-one element, read off its reduced trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementType {
    /// `+1` or `-1`: acts trivially on the upper half plane.
    Central,
    /// `|trd| < 2`: fixes a point of the upper half plane; finite order in
    /// arithmetic groups.
    Elliptic,
    /// `|trd| = 2` but not central: a single fixed point on the boundary.
    Parabolic,
    /// `|trd| > 2`: translation along a geodesic; infinite order.
    Hyperbolic,
}

impl fmt::Display for ElementType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ElementType::Central => "central",
            ElementType::Elliptic => "elliptic",
            ElementType::Parabolic => "parabolic",
            ElementType::Hyperbolic => "hyperbolic",
        };
        write!(f, "{name}")
    }
}

/// Classifies a norm-one element by its reduced trace.
pub fn element_type(q: &Quaternion) -> Result<ElementType, OrderError> {
    let norm = q.reduced_norm();
    if norm != rat(1) {
        return Err(OrderError::NotNormOne(exact_core::format_rational(&norm)));
    }
    let one = q.algebra().one();
    if *q == one || *q == -one {
        return Ok(ElementType::Central);
    }
    let trace = q.reduced_trace().abs();
    Ok(if trace < rat(2) {
        ElementType::Elliptic
    } else if trace == rat(2) {
        ElementType::Parabolic
    } else {
        ElementType::Hyperbolic
    })
}

/// How many powers [`torsion_certificate`] examines.
///
/// A torsion unit of a rational quaternion algebra generates a cyclic group
/// of order `n` with `phi(n) <= 2`, so `n` is one of 1, 2, 3, 4, 6; checking
/// powers up to 12 certifies the answer with room to spare.
pub const TORSION_POWER_BOUND: u32 = 12;

/// Outcome of the finite torsion check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorsionCertificate {
    /// `q^order = 1` and no smaller positive power is 1.
    Torsion {
        /// The exact order of the element.
        order: u32,
    },
    /// No power up to [`TORSION_POWER_BOUND`] is 1, which for norm-one
    /// elements certifies infinite order.
    NonTorsion {
        /// Number of powers examined.
        powers_checked: u32,
    },
}

/// Decides whether the norm-one element `q` has finite order, by direct
/// examination of its first [`TORSION_POWER_BOUND`] powers.
pub fn torsion_certificate(q: &Quaternion) -> Result<TorsionCertificate, OrderError> {
    let norm = q.reduced_norm();
    if norm != rat(1) {
        return Err(OrderError::NotNormOne(exact_core::format_rational(&norm)));
    }
    let one = q.algebra().one();
    let mut power = q.clone();
    for n in 1..=TORSION_POWER_BOUND {
        if power == one {
            return Ok(TorsionCertificate::Torsion { order: n });
        }
        power = power * q.clone();
    }
    Ok(TorsionCertificate::NonTorsion {
        powers_checked: TORSION_POWER_BOUND,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::ratio;
    use quaternion::QuaternionAlgebra;

    fn alg() -> QuaternionAlgebra {
        QuaternionAlgebra::from_integers(2, -3).unwrap()
    }

    #[test]
    fn classification_by_trace() {
        let h = alg();
        assert_eq!(element_type(&h.one()).unwrap(), ElementType::Central);
        assert_eq!(element_type(&(-h.one())).unwrap(), ElementType::Central);

        // (1 + y)/2 has norm 1 and trace 1: elliptic.
        let e = h.element(ratio(1, 2), rat(0), ratio(1, 2), rat(0));
        assert_eq!(element_type(&e).unwrap(), ElementType::Elliptic);

        // 3 + 2x has norm 1 and trace 6: hyperbolic.
        let pell = h.element_from_integers(3, 2, 0, 0);
        assert_eq!(element_type(&pell).unwrap(), ElementType::Hyperbolic);

        // In the split algebra (1, 1): 1 + (y + xy)/2 is the shear matrix
        // [[1, 1], [0, 1]] -- parabolic.
        let split = QuaternionAlgebra::from_integers(1, 1).unwrap();
        let shear = split.element(rat(1), rat(0), ratio(1, 2), ratio(1, 2));
        assert_eq!(element_type(&shear).unwrap(), ElementType::Parabolic);

        // Norm must be 1.
        assert!(element_type(&h.x()).is_err());
    }

    #[test]
    fn torsion_orders() {
        let h = alg();
        let one = h.one();
        assert_eq!(
            torsion_certificate(&one).unwrap(),
            TorsionCertificate::Torsion { order: 1 }
        );
        assert_eq!(
            torsion_certificate(&(-one)).unwrap(),
            TorsionCertificate::Torsion { order: 2 }
        );

        // (1 + y)/2 has order 6, its square (-1 + y)/2 has order 3.
        let e = h.element(ratio(1, 2), rat(0), ratio(1, 2), rat(0));
        assert_eq!(
            torsion_certificate(&e).unwrap(),
            TorsionCertificate::Torsion { order: 6 }
        );
        let e2 = e.clone() * e.clone();
        assert_eq!(
            torsion_certificate(&e2).unwrap(),
            TorsionCertificate::Torsion { order: 3 }
        );

        // x in (-1, -1) squares to -1: order 4.
        let ham = QuaternionAlgebra::from_integers(-1, -1).unwrap();
        assert_eq!(
            torsion_certificate(&ham.x()).unwrap(),
            TorsionCertificate::Torsion { order: 4 }
        );
    }

    #[test]
    fn non_torsion_certificates() {
        let h = alg();
        let pell = h.element_from_integers(3, 2, 0, 0);
        assert_eq!(
            torsion_certificate(&pell).unwrap(),
            TorsionCertificate::NonTorsion { powers_checked: 12 }
        );

        // Parabolic elements are never torsion.
        let split = QuaternionAlgebra::from_integers(1, 1).unwrap();
        let shear = split.element(rat(1), rat(0), ratio(1, 2), ratio(1, 2));
        assert_eq!(
            torsion_certificate(&shear).unwrap(),
            TorsionCertificate::NonTorsion { powers_checked: 12 }
        );
    }
}
