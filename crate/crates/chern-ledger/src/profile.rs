//! The Chern coefficient profile of an m-dimensional quotient of the ball:
//! every Chern class is a fixed rational multiple of the corresponding
//! power of the first one, with coefficient binom(m+1, r) / (m+1)^r.

use exact_core::Rational;
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use crate::error::LedgerError;

/// The list of coefficients tying c_r to c_1^r in dimension m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernProfile {
    m: u32,
    coefficients: Vec<Rational>,
}

impl ChernProfile {
    /// The total dimension.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// The coefficient of `c_1^r` in `c_r`, for `r = 0..=m`.
    pub fn coefficient(&self, r: usize) -> &Rational {
        &self.coefficients[r]
    }

    /// All coefficients in order of increasing degree.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }
}

/// Builds the coefficient profile in dimension `m >= 1`.
pub fn chern_profile(m: u32) -> Result<ChernProfile, LedgerError> {
    if m < 1 {
        return Err(LedgerError::DimensionTooSmall { min: 1, got: m });
    }
    let m_plus_one = BigInt::from(m + 1);
    let mut power = BigInt::one();
    let mut coefficients = Vec::with_capacity(m as usize + 1);
    for r in 0..=m {
        let top = binomial(m_plus_one.clone(), BigInt::from(r));
        coefficients.push(Rational::new(top, power.clone()));
        power *= &m_plus_one;
    }
    Ok(ChernProfile { m, coefficients })
}

/// The scalar gap `m c_1^2 - 2 (m+1) c_2`; zero exactly when the
/// curvature-equality case of the second Chern inequality holds.
pub fn chen_ogiue_gap(m: u32, c1sq: &Rational, c2: &Rational) -> Result<Rational, LedgerError> {
    if m < 2 {
        return Err(LedgerError::DimensionTooSmall { min: 2, got: m });
    }
    let m_rat = Rational::from_integer(BigInt::from(m));
    let two_m_plus_two = Rational::from_integer(BigInt::from(2 * (m + 1)));
    Ok(m_rat * c1sq - two_m_plus_two * c2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{rat, ratio};

    #[test]
    fn the_two_smallest_profiles_are_frozen() {
        let line = chern_profile(1).unwrap();
        assert_eq!(line.coefficients(), &[rat(1), rat(1)]);
        let threefold = chern_profile(3).unwrap();
        assert_eq!(
            threefold.coefficients(),
            &[rat(1), rat(1), ratio(3, 8), ratio(1, 16)]
        );
    }

    #[test]
    fn dimension_zero_is_rejected() {
        assert_eq!(
            chern_profile(0),
            Err(LedgerError::DimensionTooSmall { min: 1, got: 0 })
        );
    }

    #[test]
    fn the_profile_satisfies_the_second_chern_identity() {
        for m in 2..=30 {
            let profile = chern_profile(m).unwrap();
            let c1sq = profile.coefficient(1) * profile.coefficient(1);
            let gap = chen_ogiue_gap(m, &c1sq, profile.coefficient(2)).unwrap();
            assert_eq!(gap, rat(0), "gap at m = {m}");
        }
    }

    #[test]
    fn plane_numbers_close_the_gap_and_quadric_numbers_do_not() {
        // c_1^2 = 9, c_2 = 3 closes it; c_1^2 = 8, c_2 = 4 misses by -8.
        assert_eq!(chen_ogiue_gap(2, &rat(9), &rat(3)).unwrap(), rat(0));
        assert_eq!(chen_ogiue_gap(2, &rat(8), &rat(4)).unwrap(), rat(-8));
    }

    #[test]
    fn the_gap_requires_a_surface() {
        assert_eq!(
            chen_ogiue_gap(1, &rat(1), &rat(1)),
            Err(LedgerError::DimensionTooSmall { min: 2, got: 1 })
        );
    }
}
