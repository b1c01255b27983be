//! Integer factorization helpers used for squarefree normalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Deterministic Miller-Rabin primality test.
///
/// The witness set `{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}` is proven
/// complete for all `n < 3.3 * 10^24`, far beyond every integer this workspace
/// manipulates; larger inputs are still tested against the same witnesses and
/// the verdict is then (astronomically reliable) probabilistic.
pub fn is_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(small);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // Write n - 1 = 2^s * d with d odd.
    let n_minus_1 = n - BigInt::one();
    let mut d = n_minus_1.clone();
    let mut s = 0u64;
    while d.is_even() {
        d /= 2;
        s += 1;
    }
    'witness: for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigInt::from(small);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard's rho with Brent cycle detection; returns a nontrivial factor of
/// composite odd `n > 1`.
fn pollard_rho(n: &BigInt) -> BigInt {
    // x -> x^2 + c mod n, with deterministic restarts over increasing c.
    for c in 1u64.. {
        let c = BigInt::from(c);
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut divisor = BigInt::one();
        while divisor.is_one() {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            if x == y {
                break; // cycle without factor; restart with next c
            }
            divisor = (&x - &y).abs().gcd(n);
        }
        if !divisor.is_one() && divisor != *n {
            return divisor;
        }
    }
    unreachable!("pollard_rho called on prime or unit input")
}

/// Prime factorization of `|n|` as `(prime, exponent)` pairs in increasing
/// prime order.  `n` must be nonzero; the sign is discarded.
pub fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(!n.is_zero(), "factor: input must be nonzero");
    let mut remaining = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    // Trial division knocks out everything small; rho handles the rest.
    let mut small = 2u64;
    while small < 10_000 && remaining > BigInt::one() {
        let p = BigInt::from(small);
        if &p * &p > remaining {
            break;
        }
        let mut e = 0;
        while (&remaining % &p).is_zero() {
            remaining /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        small += if small == 2 { 1 } else { 2 };
    }
    let mut stack = Vec::new();
    if remaining > BigInt::one() {
        stack.push(remaining);
    }
    while let Some(m) = stack.pop() {
        if is_prime(&m) {
            match out.iter_mut().find(|(p, _)| *p == m) {
                Some((_, e)) => *e += 1,
                None => out.push((m, 1)),
            }
            continue;
        }
        let d = pollard_rho(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Writes `n = s^2 * d` with `d` squarefree and `s > 0`, returning `(s, d)`.
/// Requires `n > 0`.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "squarefree_decompose: input must be positive");
    let mut square_part = BigInt::one();
    let mut squarefree = BigInt::one();
    for (p, e) in factor(n) {
        if e % 2 == 1 {
            squarefree *= &p;
        }
        square_part *= p.pow(e / 2);
    }
    (square_part, squarefree)
}

/// Convenience: factorization restricted to machine-size primes, as `u64`s.
/// Panics if some prime factor exceeds `u64::MAX`.
pub fn factor_u64(n: &BigInt) -> Vec<(u64, u32)> {
    factor(n)
        .into_iter()
        .map(|(p, e)| {
            (
                p.to_u64().expect("prime factor does not fit in u64"),
                e,
            )
        })
        .collect()
}
