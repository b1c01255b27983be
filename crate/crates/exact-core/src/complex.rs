//! Exact complex numbers over real quadratic scalars.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::interval::ComplexInterval;
use crate::quad::QuadScalar;
use crate::rational::Rational;

/// An exact complex number `re + im*i` whose parts are [`QuadScalar`]s.
///
/// Both parts must live in a common quadratic field; as with [`QuadScalar`],
/// rational parts (radicand 1) are compatible with everything and arithmetic
/// across genuinely different radicands panics.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexExactScalar {
    re: QuadScalar,
    im: QuadScalar,
}

impl ComplexExactScalar {
    /// Builds `re + im*i`.
    pub fn new(re: QuadScalar, im: QuadScalar) -> Self {
        // Surface incompatible radicands immediately rather than at first use.
        re.try_unify(&im)
            .expect("complex parts over different quadratic fields");
        ComplexExactScalar { re, im }
    }

    /// The complex rational `re + im*i`.
    pub fn from_rationals(re: Rational, im: Rational) -> Self {
        ComplexExactScalar {
            re: QuadScalar::rational(re),
            im: QuadScalar::rational(im),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        ComplexExactScalar {
            re: QuadScalar::zero(),
            im: QuadScalar::one(),
        }
    }

    /// A real value.
    pub fn real(re: QuadScalar) -> Self {
        ComplexExactScalar {
            re,
            im: QuadScalar::zero(),
        }
    }

    /// Real part.
    pub fn re(&self) -> &QuadScalar {
        &self.re
    }

    /// Imaginary part.
    pub fn im(&self) -> &QuadScalar {
        &self.im
    }

    /// Complex conjugate.
    pub fn conjugate(&self) -> Self {
        ComplexExactScalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`, the squared modulus, as a real scalar.
    pub fn norm_sq(&self) -> QuadScalar {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        let n_inv = n.inv().expect("norm of nonzero complex scalar is nonzero");
        let conj = self.conjugate();
        Some(ComplexExactScalar {
            re: conj.re * n_inv.clone(),
            im: conj.im * n_inv,
        })
    }

    /// True when the value is real.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Rectangle enclosure of the value, for interval fallback paths.
    pub fn enclosure(&self, bits: u32) -> ComplexInterval {
        ComplexInterval {
            re: self.re.enclosure(bits),
            im: self.im.enclosure(bits),
        }
    }
}

impl Add for ComplexExactScalar {
    type Output = ComplexExactScalar;
    fn add(self, rhs: ComplexExactScalar) -> ComplexExactScalar {
        ComplexExactScalar {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for ComplexExactScalar {
    type Output = ComplexExactScalar;
    fn sub(self, rhs: ComplexExactScalar) -> ComplexExactScalar {
        ComplexExactScalar {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Neg for ComplexExactScalar {
    type Output = ComplexExactScalar;
    fn neg(self) -> ComplexExactScalar {
        ComplexExactScalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for ComplexExactScalar {
    type Output = ComplexExactScalar;
    fn mul(self, rhs: ComplexExactScalar) -> ComplexExactScalar {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        ComplexExactScalar { re, im }
    }
}

impl Zero for ComplexExactScalar {
    fn zero() -> Self {
        ComplexExactScalar {
            re: QuadScalar::zero(),
            im: QuadScalar::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for ComplexExactScalar {
    fn one() -> Self {
        ComplexExactScalar {
            re: QuadScalar::one(),
            im: QuadScalar::zero(),
        }
    }
}

impl From<QuadScalar> for ComplexExactScalar {
    fn from(re: QuadScalar) -> Self {
        ComplexExactScalar::real(re)
    }
}

impl fmt::Display for ComplexExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "({})*i", self.im)
        } else {
            write!(f, "({}) + ({})*i", self.re, self.im)
        }
    }
}

impl fmt::Debug for ComplexExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
