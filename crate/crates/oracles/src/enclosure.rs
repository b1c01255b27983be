use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer square root by Newton iteration: the largest `s` with `s² ≤ n`.
///
/// Hand-rolled on purpose — the production code reaches for library
/// integer roots, and this oracle must not share that path.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative number");
    if n.is_zero() {
        return BigInt::zero();
    }
    // Initial guess: 2^(ceil(bits/2)) ≥ √n, then monotone Newton descent.
    let mut x: BigInt = BigInt::one() << ((n.bits() + 1) / 2) as usize;
    loop {
        let y: BigInt = (&x + n / &x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    x
}

/// Decimal enclosure `[lo, hi]` of `p + q·√a` with `hi − lo ≤ 2·|q|·10⁻ᵈⁱᵍⁱᵗˢ`.
///
/// Built from the integer square root of `a·10^(2·digits)`, which brackets
/// `√a` between two consecutive multiples of `10⁻ᵈⁱᵍⁱᵗˢ`.
pub fn decimal_enclosure(
    p: &BigRational,
    q: &BigRational,
    a: &BigInt,
    digits: u32,
) -> (BigRational, BigRational) {
    assert!(a.is_positive(), "radicand must be positive");
    let scale = BigInt::from(10u32).pow(digits);
    let s = isqrt(&(a * &scale * &scale));
    // s/scale ≤ √a ≤ (s+1)/scale
    let lo_root = BigRational::new(s.clone(), scale.clone());
    let hi_root = BigRational::new(s + 1, scale);
    let (qlo, qhi) = if q.is_negative() {
        (q * &hi_root, q * &lo_root)
    } else {
        (q * &lo_root, q * &hi_root)
    };
    (p + qlo, p + qhi)
}

/// Sign of `p + q·√a` from a `digits`-digit decimal enclosure.
///
/// Returns `None` when the enclosure still straddles zero (the caller can
/// retry with more digits, or the value may be exactly zero).
pub fn decimal_sign(p: &BigRational, q: &BigRational, a: &BigInt, digits: u32) -> Option<i32> {
    let (lo, hi) = decimal_enclosure(p, q, a, digits);
    if lo.is_positive() {
        Some(1)
    } else if hi.is_negative() {
        Some(-1)
    } else if lo.is_zero() && hi.is_zero() {
        Some(0)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn isqrt_small_values() {
        for n in 0..2000u32 {
            let s = isqrt(&BigInt::from(n));
            assert!(&s * &s <= BigInt::from(n));
            let s1 = &s + 1;
            assert!(&s1 * &s1 > BigInt::from(n));
        }
    }

    #[test]
    fn isqrt_perfect_squares() {
        let big = BigInt::from(12345678901234567890u64);
        assert_eq!(isqrt(&(&big * &big)), big);
    }

    #[test]
    fn enclosure_brackets_sqrt2() {
        // 1 + 1·√2 ≈ 2.41421356…
        let (lo, hi) = decimal_enclosure(&rat(1, 1), &rat(1, 1), &BigInt::from(2), 30);
        assert!(lo < hi);
        assert!(lo > rat(24142, 10000));
        assert!(hi < rat(24143, 10000));
    }

    #[test]
    fn sign_of_near_cancellation() {
        // −3 + 2√2 ≈ −0.1716 < 0
        assert_eq!(
            decimal_sign(&rat(-3, 1), &rat(2, 1), &BigInt::from(2), 30),
            Some(-1)
        );
        // 3 − 2√2 > 0
        assert_eq!(
            decimal_sign(&rat(3, 1), &rat(-2, 1), &BigInt::from(2), 30),
            Some(1)
        );
    }
}
