//! Rational interval arithmetic with certified square-root enclosures.
//!
//! Used as the fallback evaluation layer when a quantity leaves the quadratic
//! field the rest of a computation lives in.  Endpoint arithmetic is exact, so
//! every interval produced here genuinely contains the real value it tracks;
//! the only approximation step is the square-root enclosure, whose width is
//! controlled by a caller-chosen bit count.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// A closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct RatInterval {
    lo: Rational,
    hi: Rational,
}

impl RatInterval {
    /// The degenerate interval `[r, r]`.
    pub fn point(r: Rational) -> Self {
        RatInterval { lo: r.clone(), hi: r }
    }

    /// The interval `[lo, hi]`; panics if `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    /// Lower endpoint.
    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    /// Upper endpoint.
    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// Exact width `hi - lo`.
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Midpoint `(lo + hi)/2`.
    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    /// True when 0 lies in the interval.
    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// The sign of every point in the interval, when they all agree:
    /// `Some(1)`, `Some(-1)`, `Some(0)` for the point interval `[0, 0]`, and
    /// `None` when the interval straddles zero.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// Scales the interval by an exact rational (sign-aware).
    pub fn scaled(&self, factor: &Rational) -> Self {
        let a = &self.lo * factor;
        let b = &self.hi * factor;
        if a <= b {
            RatInterval { lo: a, hi: b }
        } else {
            RatInterval { lo: b, hi: a }
        }
    }

    /// Certified enclosure of `sqrt(a)` for `a >= 0`, with width at most
    /// `2^-bits * max(1, sqrt(a))`.
    ///
    /// Computed as `floor(sqrt(num * den * 4^bits))` over `den * 2^bits`, all
    /// in exact integer arithmetic.
    pub fn sqrt_nonneg(a: &Rational, bits: u32) -> Self {
        assert!(!a.is_negative(), "sqrt_nonneg: negative input");
        if a.is_zero() {
            return RatInterval::point(Rational::zero());
        }
        let scale = BigInt::one() << bits;
        let inner = a.numer() * a.denom() * &scale * &scale;
        let root = inner.sqrt(); // floor of the integer square root
        let denom = a.denom() * &scale;
        let lo = Rational::new(root.clone(), denom.clone());
        let hi = Rational::new(root + BigInt::one(), denom);
        RatInterval { lo, hi }
    }

    /// Multiplicative inverse, or `None` when the interval contains zero.
    pub fn inv(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        let a = Rational::one() / &self.hi;
        let b = Rational::one() / &self.lo;
        Some(RatInterval::new(a.clone().min(b.clone()), a.max(b)))
    }
}

impl Add for RatInterval {
    type Output = RatInterval;
    fn add(self, rhs: RatInterval) -> RatInterval {
        RatInterval {
            lo: self.lo + rhs.lo,
            hi: self.hi + rhs.hi,
        }
    }
}

impl Sub for RatInterval {
    type Output = RatInterval;
    fn sub(self, rhs: RatInterval) -> RatInterval {
        self + (-rhs)
    }
}

impl Neg for RatInterval {
    type Output = RatInterval;
    fn neg(self) -> RatInterval {
        RatInterval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Mul for RatInterval {
    type Output = RatInterval;
    fn mul(self, rhs: RatInterval) -> RatInterval {
        let candidates = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }
}

impl Zero for RatInterval {
    fn zero() -> Self {
        RatInterval::point(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }
}

/// A rectangle in the complex plane with exact rational corner coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexInterval {
    /// Real-part enclosure.
    pub re: RatInterval,
    /// Imaginary-part enclosure.
    pub im: RatInterval,
}

impl ComplexInterval {
    /// The exact complex rational `re + im*i`.
    pub fn point(re: Rational, im: Rational) -> Self {
        ComplexInterval {
            re: RatInterval::point(re),
            im: RatInterval::point(im),
        }
    }

    /// Complex sum.
    pub fn add(&self, rhs: &Self) -> Self {
        ComplexInterval {
            re: self.re.clone() + rhs.re.clone(),
            im: self.im.clone() + rhs.im.clone(),
        }
    }

    /// Complex difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        ComplexInterval {
            re: self.re.clone() - rhs.re.clone(),
            im: self.im.clone() - rhs.im.clone(),
        }
    }

    /// Complex product, each component by interval arithmetic.
    pub fn mul(&self, rhs: &Self) -> Self {
        ComplexInterval {
            re: self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone(),
            im: self.re.clone() * rhs.im.clone() + self.im.clone() * rhs.re.clone(),
        }
    }

    /// True when 0 lies in both component intervals.
    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn sqrt_enclosure_tightness() {
        let iv = RatInterval::sqrt_nonneg(&rat(2), 80);
        // Interval must contain sqrt(2): check lo^2 <= 2 <= hi^2.
        assert!(iv.lo() * iv.lo() <= rat(2));
        assert!(iv.hi() * iv.hi() >= rat(2));
        assert!(iv.width() <= Rational::new(1.into(), num_bigint::BigInt::one() << 80));

        // Perfect square still returns a bracketing interval.
        let iv = RatInterval::sqrt_nonneg(&ratio(9, 4), 20);
        assert!(iv.lo() <= &ratio(3, 2) && &ratio(3, 2) <= iv.hi());
    }

    #[test]
    fn interval_ops_preserve_containment() {
        let a = RatInterval::new(ratio(-1, 2), ratio(1, 3));
        let b = RatInterval::new(rat(2), rat(3));
        let prod = a.clone() * b.clone();
        // Extremes: -1/2*3 = -3/2 and 1/3*3 = 1.
        assert_eq!(prod.lo(), &ratio(-3, 2));
        assert_eq!(prod.hi(), &rat(1));
        assert_eq!((a.clone() + b.clone()).lo(), &ratio(3, 2));
        assert!(b.inv().is_some());
        assert!(a.inv().is_none());
        let binv = b.inv().unwrap();
        assert_eq!(binv.lo(), &ratio(1, 3));
        assert_eq!(binv.hi(), &ratio(1, 2));
    }

    #[test]
    fn signs() {
        assert_eq!(RatInterval::new(rat(1), rat(2)).sign(), Some(1));
        assert_eq!(RatInterval::new(rat(-2), rat(-1)).sign(), Some(-1));
        assert_eq!(RatInterval::point(rat(0)).sign(), Some(0));
        assert_eq!(RatInterval::new(rat(-1), rat(1)).sign(), None);
    }

    #[test]
    fn complex_rectangle_product() {
        // (1 + i)^2 = 2i
        let z = ComplexInterval::point(rat(1), rat(1));
        let sq = z.mul(&z);
        assert_eq!(sq.re, RatInterval::point(rat(0)));
        assert_eq!(sq.im, RatInterval::point(rat(2)));
    }
}
