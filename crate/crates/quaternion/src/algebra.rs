//! Elements of a rational quaternion algebra and their arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use exact_core::{format_rational, rat, Rational};
use num_traits::{One, Signed, Zero};

use crate::error::QuatError;

/// The quaternion algebra `(a, b)` over `Q`: generators `x, y` with
/// `x^2 = a`, `y^2 = b`, `yx = -xy`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionAlgebra {
    a: Rational,
    b: Rational,
}

impl QuaternionAlgebra {
    /// Builds the algebra `(a, b)`; both parameters must be nonzero.
    pub fn new(a: Rational, b: Rational) -> Result<Self, QuatError> {
        if a.is_zero() {
            return Err(QuatError::ZeroParameter("a"));
        }
        if b.is_zero() {
            return Err(QuatError::ZeroParameter("b"));
        }
        Ok(QuaternionAlgebra { a, b })
    }

    /// Shorthand for integer parameters.
    pub fn from_integers(a: i64, b: i64) -> Result<Self, QuatError> {
        Self::new(rat(a), rat(b))
    }

    /// First parameter `a = x^2`.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Second parameter `b = y^2`.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// The element with coordinates `(t, u, v, w)` in the basis `1, x, y, xy`.
    pub fn element(&self, t: Rational, u: Rational, v: Rational, w: Rational) -> Quaternion {
        Quaternion {
            algebra: self.clone(),
            coords: [t, u, v, w],
        }
    }

    /// The element with integer coordinates in the basis `1, x, y, xy`.
    pub fn element_from_integers(&self, t: i64, u: i64, v: i64, w: i64) -> Quaternion {
        self.element(rat(t), rat(u), rat(v), rat(w))
    }

    /// The scalar `c`, embedded in the algebra.
    pub fn scalar(&self, c: Rational) -> Quaternion {
        self.element(c, Rational::zero(), Rational::zero(), Rational::zero())
    }

    /// Multiplicative identity.
    pub fn one(&self) -> Quaternion {
        self.scalar(Rational::one())
    }

    /// Additive identity.
    pub fn zero(&self) -> Quaternion {
        self.scalar(Rational::zero())
    }

    /// The generator `x`.
    pub fn x(&self) -> Quaternion {
        self.element(Rational::zero(), Rational::one(), Rational::zero(), Rational::zero())
    }

    /// The generator `y`.
    pub fn y(&self) -> Quaternion {
        self.element(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    /// The product `xy`.
    pub fn xy(&self) -> Quaternion {
        self.element(Rational::zero(), Rational::zero(), Rational::zero(), Rational::one())
    }

    /// The basis `1, x, y, xy` in order.
    pub fn basis(&self) -> [Quaternion; 4] {
        [self.one(), self.x(), self.y(), self.xy()]
    }
}

impl fmt::Display for QuaternionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            format_rational(&self.a),
            format_rational(&self.b)
        )
    }
}

/// An element `t + u*x + v*y + w*xy` of a [`QuaternionAlgebra`].
///
/// Arithmetic operators panic when the operands belong to different algebras;
/// use [`Quaternion::try_mul`] and friends when the algebras are not known to
/// match statically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quaternion {
    algebra: QuaternionAlgebra,
    coords: [Rational; 4],
}

impl Quaternion {
    /// The ambient algebra.
    pub fn algebra(&self) -> &QuaternionAlgebra {
        &self.algebra
    }

    /// Coordinates `(t, u, v, w)` in the basis `1, x, y, xy`.
    pub fn coords(&self) -> &[Rational; 4] {
        &self.coords
    }

    /// Conjugate `t - u*x - v*y - w*xy` (the canonical involution).
    pub fn conjugate(&self) -> Quaternion {
        Quaternion {
            algebra: self.algebra.clone(),
            coords: [
                self.coords[0].clone(),
                -self.coords[1].clone(),
                -self.coords[2].clone(),
                -self.coords[3].clone(),
            ],
        }
    }

    /// Reduced trace `q + conj(q) = 2t`.
    pub fn reduced_trace(&self) -> Rational {
        &self.coords[0] + &self.coords[0]
    }

    /// Reduced norm `q * conj(q) = t^2 - a u^2 - b v^2 + ab w^2`.
    pub fn reduced_norm(&self) -> Rational {
        let [t, u, v, w] = &self.coords;
        let a = &self.algebra.a;
        let b = &self.algebra.b;
        t * t - a * &(u * u) - b * &(v * v) + a * b * (w * w)
    }

    /// Multiplicative inverse `conj(q) / nrd(q)`; fails when the reduced norm
    /// vanishes (which happens for nonzero elements in split algebras).
    pub fn inverse(&self) -> Result<Quaternion, QuatError> {
        let n = self.reduced_norm();
        if n.is_zero() {
            return Err(QuatError::NotInvertible);
        }
        let conj = self.conjugate();
        Ok(Quaternion {
            algebra: conj.algebra.clone(),
            coords: conj.coords.map(|c| c / &n),
        })
    }

    /// True when all four coordinates are integers.
    pub fn has_integral_coords(&self) -> bool {
        self.coords.iter().all(exact_core::is_integer)
    }

    /// Checked sum; fails on mismatched algebras.
    pub fn try_add(&self, rhs: &Quaternion) -> Result<Quaternion, QuatError> {
        self.check_same(rhs)?;
        Ok(self.clone() + rhs.clone())
    }

    /// Checked product; fails on mismatched algebras.
    pub fn try_mul(&self, rhs: &Quaternion) -> Result<Quaternion, QuatError> {
        self.check_same(rhs)?;
        Ok(self.clone() * rhs.clone())
    }

    fn check_same(&self, rhs: &Quaternion) -> Result<(), QuatError> {
        if self.algebra == rhs.algebra {
            Ok(())
        } else {
            Err(QuatError::Exact(exact_core::ExactError::Domain(format!(
                "elements of different algebras {} and {}",
                self.algebra, rhs.algebra
            ))))
        }
    }

    /// Scales every coordinate by a rational.
    pub fn scaled(&self, c: &Rational) -> Quaternion {
        Quaternion {
            algebra: self.algebra.clone(),
            coords: self.coords.clone().map(|x| x * c),
        }
    }

    /// `self` raised to a nonnegative integer power.
    pub fn pow(&self, mut e: u64) -> Quaternion {
        let mut base = self.clone();
        let mut acc = self.algebra.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base.clone();
            e >>= 1;
        }
        acc
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        assert_eq!(
            self.algebra, rhs.algebra,
            "sum of elements from different quaternion algebras"
        );
        let [t1, u1, v1, w1] = self.coords;
        let [t2, u2, v2, w2] = rhs.coords;
        Quaternion {
            algebra: self.algebra,
            coords: [t1 + t2, u1 + u2, v1 + v2, w1 + w2],
        }
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        self + (-rhs)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion {
            algebra: self.algebra,
            coords: self.coords.map(|c| -c),
        }
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        assert_eq!(
            self.algebra, rhs.algebra,
            "product of elements from different quaternion algebras"
        );
        let a = &self.algebra.a;
        let b = &self.algebra.b;
        let ab = a * b;
        let [t1, u1, v1, w1] = &self.coords;
        let [t2, u2, v2, w2] = &rhs.coords;
        // From the relations x^2 = a, y^2 = b, yx = -xy:
        //   x * xy = a y,   xy * x = -a y,   y * xy = -b x,   xy * y = b x,
        //   (xy)^2 = -ab.
        let t = t1 * t2 + a * &(u1 * u2) + b * &(v1 * v2) - &ab * &(w1 * w2);
        let u = t1 * u2 + u1 * t2 - b * &(v1 * w2) + b * &(w1 * v2);
        let v = t1 * v2 + v1 * t2 + a * &(u1 * w2) - a * &(w1 * u2);
        let w = t1 * w2 + w1 * t2 + u1 * v2 - v1 * u2;
        Quaternion {
            algebra: self.algebra,
            coords: [t, u, v, w],
        }
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "x", "y", "xy"];
        let mut first = true;
        for (c, name) in self.coords.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if name.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{}*{name}", format_rational(&mag))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::ratio;

    fn alg() -> QuaternionAlgebra {
        QuaternionAlgebra::from_integers(2, -3).unwrap()
    }

    #[test]
    fn multiplication_table() {
        let h = alg();
        let (x, y, xy) = (h.x(), h.y(), h.xy());
        assert_eq!(x.clone() * x.clone(), h.scalar(rat(2)));
        assert_eq!(y.clone() * y.clone(), h.scalar(rat(-3)));
        assert_eq!(x.clone() * y.clone(), xy);
        assert_eq!(y.clone() * x.clone(), -xy.clone());
        assert_eq!(xy.clone() * xy.clone(), h.scalar(rat(6)));
        assert_eq!(x.clone() * xy.clone(), y.scaled(&rat(2)));
        assert_eq!(xy.clone() * x.clone(), -y.scaled(&rat(2)));
        assert_eq!(y.clone() * xy.clone(), x.scaled(&rat(3)));
        assert_eq!(xy * y, -x.scaled(&rat(3)));
    }

    #[test]
    fn norm_trace_conjugate() {
        let h = alg();
        let q = h.element_from_integers(5, 3, 0, 1);
        assert_eq!(q.reduced_trace(), rat(10));
        assert_eq!(q.reduced_norm(), rat(1));
        assert_eq!(q.clone() * q.conjugate(), h.scalar(q.reduced_norm()));
        assert_eq!(
            q.clone() + q.conjugate(),
            h.scalar(q.reduced_trace())
        );

        let r = h.element(rat(1), ratio(1, 2), rat(0), ratio(-1, 2));
        // nrd = 1 - 2/4 + (-6)/4 = -1
        assert_eq!(r.reduced_norm(), rat(-1));
        assert!(!r.has_integral_coords());
    }

    #[test]
    fn inverse_when_norm_nonzero() {
        let h = alg();
        let q = h.element_from_integers(3, 2, 0, 0); // nrd = 9 - 8 = 1
        let inv = q.inverse().unwrap();
        assert_eq!(q.clone() * inv.clone(), h.one());
        assert_eq!(inv, q.conjugate());

        // A split algebra has zero divisors: 1 + x in (1, 1).
        let split = QuaternionAlgebra::from_integers(1, 1).unwrap();
        let zd = split.element_from_integers(1, 1, 0, 0);
        assert_eq!(zd.reduced_norm(), rat(0));
        assert!(matches!(zd.inverse(), Err(QuatError::NotInvertible)));
    }

    #[test]
    fn powers() {
        let h = alg();
        let q = h.element_from_integers(3, 2, 0, 0);
        assert_eq!(q.pow(0), h.one());
        assert_eq!(q.pow(1), q);
        assert_eq!(q.pow(2), q.clone() * q.clone());
        assert_eq!(q.pow(5), q.clone() * q.clone() * q.clone() * q.clone() * q.clone());
    }

    #[test]
    #[should_panic(expected = "different quaternion algebras")]
    fn mixing_algebras_panics() {
        let p = alg().x();
        let q = QuaternionAlgebra::from_integers(-1, -1).unwrap().x();
        let _ = p * q;
    }

    #[test]
    fn checked_ops_report_mismatch() {
        let p = alg().x();
        let q = QuaternionAlgebra::from_integers(-1, -1).unwrap().x();
        assert!(p.try_mul(&q).is_err());
        assert!(p.try_add(&q).is_err());
        assert!(p.try_mul(&alg().y()).is_ok());
    }

    #[test]
    fn display_reads_naturally() {
        let h = alg();
        assert_eq!(h.element_from_integers(5, 3, 0, 1).to_string(), "5 + 3*x + xy");
        assert_eq!(h.element_from_integers(0, -1, 0, 0).to_string(), "-x");
        assert_eq!(h.zero().to_string(), "0");
        assert_eq!(
            h.element(ratio(1, 2), rat(0), ratio(-1, 2), rat(0)).to_string(),
            "1/2 - 1/2*y"
        );
        assert_eq!(h.to_string(), "(2, -3)");
    }
}
