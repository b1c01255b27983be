//! Exact real quadratic scalars `p + q*sqrt(d)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::squarefree_decompose;
use crate::error::ExactError;
use crate::interval::RatInterval;
use crate::rational::{format_rational, rat, Rational};

/// An exact element `base + coeff * sqrt(radicand)` of `Q(sqrt(radicand))`.
///
/// Normal form invariants, maintained by every constructor and operation:
///
/// * `radicand >= 1` and squarefree (square parts are folded into `coeff`),
/// * `radicand == 1` implies `coeff == 0` (a rational square root is folded
///   into `base`),
/// * `coeff == 0` implies `radicand == 1`.
///
/// Consequently plain rationals always carry radicand 1 and mix freely with
/// scalars of any radicand.  Arithmetic between two *irrational* scalars with
/// different radicands has no representation here and panics; callers
/// validate a common radicand up front (see [`QuadScalar::try_unify`]).
#[derive(Clone, PartialEq, Eq)]
pub struct QuadScalar {
    base: Rational,
    coeff: Rational,
    radicand: BigInt,
}

impl QuadScalar {
    /// The rational `r` as a quadratic scalar (radicand 1).
    pub fn rational(r: Rational) -> Self {
        QuadScalar {
            base: r,
            coeff: Rational::zero(),
            radicand: BigInt::one(),
        }
    }

    /// The integer `n` as a quadratic scalar.
    pub fn integer(n: i64) -> Self {
        Self::rational(rat(n))
    }

    /// Builds `base + coeff * sqrt(radicand)` and normalizes.
    ///
    /// Accepts any `radicand >= 1`; square parts migrate into `coeff`, and a
    /// perfect-square radicand collapses the scalar to a rational.
    pub fn new(base: Rational, coeff: Rational, radicand: BigInt) -> Result<Self, ExactError> {
        if !radicand.is_positive() {
            return Err(ExactError::Domain(format!(
                "radicand must be positive, got {radicand}"
            )));
        }
        let (square_part, squarefree) = squarefree_decompose(&radicand);
        let coeff = coeff * Rational::from_integer(square_part);
        if squarefree.is_one() {
            Ok(QuadScalar::rational(base + coeff))
        } else if coeff.is_zero() {
            Ok(QuadScalar::rational(base))
        } else {
            Ok(QuadScalar {
                base,
                coeff,
                radicand: squarefree,
            })
        }
    }

    /// Exact square root of a nonnegative rational, as a quadratic scalar.
    ///
    /// `sqrt(p/q) = sqrt(p*q) / q`, so any nonnegative rational works; perfect
    /// squares come back as plain rationals.
    pub fn sqrt_of(a: &Rational) -> Result<Self, ExactError> {
        if a.is_negative() {
            return Err(ExactError::Domain(format!(
                "square root of negative rational {}",
                format_rational(a)
            )));
        }
        if a.is_zero() {
            return Ok(Self::zero());
        }
        let inner = a.numer() * a.denom();
        let coeff = Rational::new(BigInt::one(), a.denom().clone());
        Self::new(Rational::zero(), coeff, inner)
    }

    /// Rational part `base`.
    pub fn base(&self) -> &Rational {
        &self.base
    }

    /// Irrational coefficient `coeff`.
    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    /// The (squarefree) radicand; 1 exactly when the scalar is rational.
    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    /// True when the scalar lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The value as a rational, when it is one.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.base.clone())
    }

    /// Galois conjugate `base - coeff * sqrt(radicand)`.
    pub fn conjugate(&self) -> Self {
        QuadScalar {
            base: self.base.clone(),
            coeff: -self.coeff.clone(),
            radicand: self.radicand.clone(),
        }
    }

    /// Field norm `base^2 - coeff^2 * radicand`, a rational.
    pub fn norm(&self) -> Rational {
        &self.base * &self.base
            - &self.coeff * &self.coeff * Rational::from_integer(self.radicand.clone())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        // The norm of a nonzero element of a real quadratic field is nonzero
        // because the radicand is squarefree (not a rational square).
        let conj = self.conjugate();
        Some(QuadScalar {
            base: conj.base / &n,
            coeff: conj.coeff / &n,
            radicand: conj.radicand,
        })
    }

    /// Exact sign: -1, 0, or +1.
    pub fn sign(&self) -> i32 {
        qf_sign(&self.base, &self.coeff, &self.radicand)
    }

    /// True when the scalar is strictly positive.
    pub fn is_positive_value(&self) -> bool {
        self.sign() > 0
    }

    /// Joint radicand for `self` and `other`, or an error when both are
    /// irrational with different radicands.
    pub fn try_unify(&self, other: &Self) -> Result<BigInt, ExactError> {
        if self.radicand.is_one() {
            Ok(other.radicand.clone())
        } else if other.radicand.is_one() || self.radicand == other.radicand {
            Ok(self.radicand.clone())
        } else {
            Err(ExactError::Domain(format!(
                "incompatible radicands sqrt({}) and sqrt({})",
                self.radicand, other.radicand
            )))
        }
    }

    fn unify(&self, other: &Self) -> BigInt {
        self.try_unify(other)
            .expect("arithmetic between quadratic scalars over different fields")
    }

    /// A rational interval certified to contain the value, with width at most
    /// `2^-bits` times the radicand enclosure scale.
    pub fn enclosure(&self, bits: u32) -> RatInterval {
        let root = RatInterval::sqrt_nonneg(
            &Rational::from_integer(self.radicand.clone()),
            bits,
        );
        RatInterval::point(self.base.clone()) + root.scaled(&self.coeff)
    }
}

/// Exact sign of `p + q * sqrt(a)` for squarefree `a >= 1`: returns -1, 0, +1.
///
/// No approximation: when `p` and `q` disagree in sign the comparison reduces
/// to `p^2` versus `q^2 a`, which is exact rational arithmetic.
pub fn qf_sign(p: &Rational, q: &Rational, a: &BigInt) -> i32 {
    let sp = rational_sign(p);
    let sq = rational_sign(q);
    if sq == 0 {
        return sp;
    }
    if sp == sq || sp == 0 {
        return sq;
    }
    // Opposite strict signs: |p| vs |q| sqrt(a) decides; compare squares.
    let p2 = p * p;
    let q2a = q * q * Rational::from_integer(a.clone());
    match p2.cmp(&q2a) {
        std::cmp::Ordering::Greater => sp,
        std::cmp::Ordering::Less => sq,
        std::cmp::Ordering::Equal => 0,
    }
}

fn rational_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for QuadScalar {
    type Output = QuadScalar;
    fn add(self, rhs: QuadScalar) -> QuadScalar {
        let radicand = self.unify(&rhs);
        normalized(self.base + rhs.base, self.coeff + rhs.coeff, radicand)
    }
}

impl Sub for QuadScalar {
    type Output = QuadScalar;
    fn sub(self, rhs: QuadScalar) -> QuadScalar {
        self + (-rhs)
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar {
            base: -self.base,
            coeff: -self.coeff,
            radicand: self.radicand,
        }
    }
}

impl Mul for QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: QuadScalar) -> QuadScalar {
        let radicand = self.unify(&rhs);
        let a = Rational::from_integer(radicand.clone());
        let base = &self.base * &rhs.base + &self.coeff * &rhs.coeff * a;
        let coeff = &self.base * &rhs.coeff + &self.coeff * &rhs.base;
        normalized(base, coeff, radicand)
    }
}

/// Re-establishes the `coeff == 0 => radicand == 1` invariant after an
/// operation; inputs already have squarefree radicands.
fn normalized(base: Rational, coeff: Rational, radicand: BigInt) -> QuadScalar {
    if coeff.is_zero() {
        QuadScalar::rational(base)
    } else {
        QuadScalar {
            base,
            coeff,
            radicand,
        }
    }
}

impl Zero for QuadScalar {
    fn zero() -> Self {
        QuadScalar::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.base.is_zero() && self.coeff.is_zero()
    }
}

impl One for QuadScalar {
    fn one() -> Self {
        QuadScalar::rational(Rational::one())
    }
}

impl From<Rational> for QuadScalar {
    fn from(r: Rational) -> Self {
        QuadScalar::rational(r)
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "{}", format_rational(&self.base));
        }
        let root = format!("sqrt({})", self.radicand);
        let irr = if self.coeff.is_one() {
            root
        } else if self.coeff == -Rational::one() {
            format!("-{root}")
        } else {
            format!("{}*{root}", format_rational(&self.coeff))
        };
        if self.base.is_zero() {
            write!(f, "{irr}")
        } else if irr.starts_with('-') {
            write!(f, "{} - {}", format_rational(&self.base), &irr[1..])
        } else {
            write!(f, "{} + {}", format_rational(&self.base), irr)
        }
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn qs(base: Rational, coeff: Rational, rad: i64) -> QuadScalar {
        QuadScalar::new(base, coeff, BigInt::from(rad)).unwrap()
    }

    #[test]
    fn normalization_folds_squares() {
        // sqrt(8) = 2 sqrt(2)
        let s = qs(rat(0), rat(1), 8);
        assert_eq!(s.coeff(), &rat(2));
        assert_eq!(s.radicand(), &BigInt::from(2));

        // sqrt(9) = 3, a plain rational
        let t = qs(rat(1), rat(1), 9);
        assert!(t.is_rational());
        assert_eq!(t.to_rational().unwrap(), rat(4));

        // sqrt(9/4) = 3/2 via sqrt_of
        let u = QuadScalar::sqrt_of(&ratio(9, 4)).unwrap();
        assert_eq!(u.to_rational().unwrap(), ratio(3, 2));

        // sqrt(1/2) = sqrt(2)/2
        let v = QuadScalar::sqrt_of(&ratio(1, 2)).unwrap();
        assert_eq!(v.coeff(), &ratio(1, 2));
        assert_eq!(v.radicand(), &BigInt::from(2));
    }

    #[test]
    fn field_operations() {
        let root2 = QuadScalar::sqrt_of(&rat(2)).unwrap();
        let x = qs(rat(1), rat(1), 2); // 1 + sqrt2
        let product = x.clone() * x.clone(); // 3 + 2 sqrt2
        assert_eq!(product, qs(rat(3), rat(2), 2));
        assert_eq!(root2.clone() * root2.clone(), QuadScalar::integer(2));

        let inv = x.inv().unwrap(); // 1/(1+sqrt2) = -1 + sqrt2
        assert_eq!(inv, qs(rat(-1), rat(1), 2));
        assert_eq!(x * inv, QuadScalar::one());

        // coeff cancellation drops back to radicand 1
        let y = qs(rat(0), rat(3), 2) - qs(rat(-1), rat(3), 2);
        assert!(y.is_rational());
        assert_eq!(y.to_rational().unwrap(), rat(1));
    }

    #[test]
    fn mixing_with_rationals_is_fine() {
        let root3 = QuadScalar::sqrt_of(&rat(3)).unwrap();
        let sum = root3.clone() + QuadScalar::integer(5);
        assert_eq!(sum, qs(rat(5), rat(1), 3));
        assert_eq!(QuadScalar::zero() * root3.clone(), QuadScalar::zero());
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixing_radicands_panics() {
        let a = QuadScalar::sqrt_of(&rat(2)).unwrap();
        let b = QuadScalar::sqrt_of(&rat(3)).unwrap();
        let _ = a + b;
    }

    #[test]
    fn sign_decision_is_exact() {
        // -3 + 2 sqrt2 = -3 + 2.828... < 0
        assert_eq!(qf_sign(&rat(-3), &rat(2), &BigInt::from(2)), -1);
        // 3 - 2 sqrt2 > 0
        assert_eq!(qf_sign(&rat(3), &rat(-2), &BigInt::from(2)), 1);
        // 2 - sqrt(4)... not squarefree; use 2 - sqrt(2) > 0 and equality case
        assert_eq!(qf_sign(&rat(2), &rat(-1), &BigInt::from(2)), 1);
        assert_eq!(qf_sign(&rat(0), &rat(0), &BigInt::from(5)), 0);
        // 7 - 3 sqrt(5): 49 vs 45, positive
        assert_eq!(qf_sign(&rat(7), &rat(-3), &BigInt::from(5)), 1);
        // -7 + 3 sqrt(5) < 0 symmetric
        assert_eq!(qf_sign(&rat(-7), &rat(3), &BigInt::from(5)), -1);
    }

    #[test]
    fn enclosure_brackets_value() {
        let x = qs(rat(-3), rat(2), 2); // about -0.1716
        let iv = x.enclosure(64);
        assert!(iv.sign() == Some(-1));
        let y = qs(rat(3), rat(-2), 2); // about 0.1716
        assert_eq!(y.enclosure(64).sign(), Some(1));
    }

    #[test]
    fn display_formats() {
        assert_eq!(qs(rat(1), ratio(1, 2), 3).to_string(), "1 + 1/2*sqrt(3)");
        assert_eq!(qs(rat(0), rat(-1), 2).to_string(), "-sqrt(2)");
        assert_eq!(qs(rat(2), rat(-1), 2).to_string(), "2 - sqrt(2)");
        assert_eq!(QuadScalar::integer(-4).to_string(), "-4");
    }
}
