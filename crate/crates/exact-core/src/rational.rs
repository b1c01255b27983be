//! Arbitrary-precision rationals and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ExactError;

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

/// The integer `n` as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d` as a reduced [`Rational`].  Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` (optionally signed, ASCII digits) into a reduced
/// rational.  Whitespace around the number or the slash is accepted.
pub fn parse_rational(text: &str) -> Result<Rational, ExactError> {
    let trimmed = text.trim();
    let (num_text, den_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed, None),
    };
    let num: BigInt = num_text
        .parse()
        .map_err(|_| ExactError::Parse(format!("invalid numerator in {trimmed:?}")))?;
    let den: BigInt = match den_text {
        Some(d) => d
            .parse()
            .map_err(|_| ExactError::Parse(format!("invalid denominator in {trimmed:?}")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(ExactError::Parse(format!("zero denominator in {trimmed:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Formats a rational as `"p"` when integral and `"p/q"` otherwise, with the
/// sign on the numerator.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// True when `value` is an integer.
pub fn is_integer(value: &Rational) -> bool {
    value.denom().is_one()
}

/// Least common multiple of the denominators of `values` (at least 1).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    let mut acc = BigInt::one();
    for v in values {
        acc = acc.lcm(v.denom());
    }
    acc.abs()
}
