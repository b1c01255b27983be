//! Hilbert symbols over the rationals, by the classical closed formulas.

use std::cmp::Ordering;
use std::fmt;

use exact_core::{is_prime, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::QuatError;

/// A place of `Q`: a finite prime or the archimedean absolute value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Place {
    /// The real place.
    Infinity,
    /// The `p`-adic place for a prime `p`.
    Prime(BigInt),
}

impl Place {
    /// Finite place for a machine-size prime.
    pub fn prime(p: u64) -> Place {
        Place::Prime(BigInt::from(p))
    }

    /// True for a finite place.
    pub fn is_finite(&self) -> bool {
        matches!(self, Place::Prime(_))
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Prime(p), Place::Prime(q)) => p.cmp(q),
            (Place::Prime(_), Place::Infinity) => Ordering::Less,
            (Place::Infinity, Place::Prime(_)) => Ordering::Greater,
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "infinity"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// Legendre symbol `(a | p)` for an odd prime `p`: `0, 1, -1`.
pub fn legendre_symbol(a: &BigInt, p: &BigInt) -> i32 {
    let a_mod = a.mod_floor(p);
    if a_mod.is_zero() {
        return 0;
    }
    let exp = (p - BigInt::one()) / BigInt::from(2);
    let r = a_mod.modpow(&exp, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// Hilbert symbol `(a, b)_v` for nonzero rationals at the place `v`.
///
/// Returns `+1` when `z^2 = a x^2 + b y^2` has a nontrivial solution over the
/// completion at `v`, and `-1` otherwise.  Rational arguments are replaced by
/// `numerator * denominator`, which lies in the same square class.
pub fn hilbert_symbol(a: &Rational, b: &Rational, place: &Place) -> Result<i32, QuatError> {
    if a.is_zero() {
        return Err(QuatError::ZeroParameter("a"));
    }
    if b.is_zero() {
        return Err(QuatError::ZeroParameter("b"));
    }
    let a_int = a.numer() * a.denom();
    let b_int = b.numer() * b.denom();
    match place {
        Place::Infinity => {
            Ok(if a_int.is_negative() && b_int.is_negative() {
                -1
            } else {
                1
            })
        }
        Place::Prime(p) => {
            if !is_prime(p) {
                return Err(QuatError::NotPrime(p.clone()));
            }
            Ok(hilbert_symbol_at_prime(&a_int, &b_int, p))
        }
    }
}

/// Valuation and unit part: `n = p^alpha * u` with `p` not dividing `u`.
fn split_valuation(n: &BigInt, p: &BigInt) -> (u64, BigInt) {
    let mut alpha = 0;
    let mut u = n.clone();
    while (&u % p).is_zero() {
        u /= p;
        alpha += 1;
    }
    (alpha, u)
}

fn hilbert_symbol_at_prime(a: &BigInt, b: &BigInt, p: &BigInt) -> i32 {
    let (alpha, u) = split_valuation(a, p);
    let (beta, v) = split_valuation(b, p);
    let two = BigInt::from(2);
    if *p == two {
        // (a, b)_2 = (-1)^( eps(u) eps(v) + alpha omega(v) + beta omega(u) )
        // with eps(u) = (u - 1)/2 mod 2 and omega(u) = (u^2 - 1)/8 mod 2.
        let eps = |n: &BigInt| -> u64 {
            (((n - BigInt::one()) / &two).mod_floor(&two))
                .try_into()
                .expect("bit value")
        };
        let omega = |n: &BigInt| -> u64 {
            (((n * n - BigInt::one()) / BigInt::from(8)).mod_floor(&two))
                .try_into()
                .expect("bit value")
        };
        let exponent = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
        if exponent % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        // (a, b)_p = (-1|p)^(alpha beta) * (u|p)^beta * (v|p)^alpha
        let minus_one = legendre_symbol(&BigInt::from(-1), p);
        let mut result = 1;
        if alpha % 2 == 1 && beta % 2 == 1 {
            result *= minus_one;
        }
        if beta % 2 == 1 {
            result *= legendre_symbol(&u, p);
        }
        if alpha % 2 == 1 {
            result *= legendre_symbol(&v, p);
        }
        result
    }
}
