/// A place of ℚ: the archimedean absolute value, or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Place {
    Real,
    Finite(u64),
}

/// Decide whether `z² = a·x² + b·y²` has a nontrivial solution over the
/// completion of ℚ at `place`, by exhaustive residue search with an explicit
/// Hensel-lifting certificate. Independent of any symbol formula.
///
/// Mathematical basis, for `f(x,y,z) = z² − a·x² − b·y²`:
///
/// * Strong Hensel lemma: an integer point `v` with
///   `v_p(f(v)) > 2·v_p(∇f(v))` lifts to a p-adic root; if some coordinate of
///   `v` is a p-unit the lifted root is nonzero.
/// * After dividing `p²`-powers out of `a` and `b` (square classes are
///   unaffected), any primitive p-adic root has gradient valuation ≤ 1 for
///   odd `p` and ≤ 2 for `p = 2`, because some coordinate is a unit and its
///   gradient slot is `2·(coefficient)·(coordinate)` with the coefficient
///   p-squarefree.
/// * Completeness of the search box: coordinates mod `p²` (odd `p`, via the
///   case split on the valuations of `a` and `b`: unit/unit roots show up
///   already mod `p`, mixed-valuation roots as `z = 0` points whose conic
///   part vanishes mod `p²`), and mod `2⁶` for `p = 2` (truncating a true
///   root keeps `v₂(f) ≥ 6 > 2·2`).
///
/// At the real place the form is isotropic iff it is indefinite, i.e. iff
/// `a > 0` or `b > 0`.
pub fn local_isotropy(a: i64, b: i64, place: Place) -> bool {
    assert!(a != 0 && b != 0, "coefficients must be nonzero");
    match place {
        Place::Real => a > 0 || b > 0,
        Place::Finite(p) => {
            assert!(p >= 2, "finite place must be a prime");
            let a = drop_square_factor(a, p as i64);
            let b = drop_square_factor(b, p as i64);
            let modulus: i64 = if p == 2 { 64 } else { (p * p) as i64 };
            search_hensel_point(a, b, p as i64, modulus)
        }
    }
}

/// Remove `p²` factors: returns `n / p^(2k)` with maximal `k`.
fn drop_square_factor(mut n: i64, p: i64) -> i64 {
    let pp = p * p;
    while n % pp == 0 {
        n /= pp;
    }
    n
}

fn val_p(mut n: i64, p: i64) -> u32 {
    assert!(n != 0);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

fn search_hensel_point(a: i64, b: i64, p: i64, m: i64) -> bool {
    // Bucket z ∈ [0, m) by z² mod p, so that for given (x, y) only the z with
    // v_p(f) ≥ 1 are visited. Any Hensel-certifiable point satisfies that.
    let mut bucket: Vec<Vec<i64>> = vec![Vec::new(); p as usize];
    for z in 0..m {
        bucket[((z * z) % p) as usize].push(z);
    }

    for x in 0..m {
        for y in 0..m {
            let s = a * x * x + b * y * y;
            let key = s.rem_euclid(p) as usize;
            for &z in &bucket[key] {
                if x % p == 0 && y % p == 0 && z % p == 0 {
                    continue; // not primitive
                }
                let f = z * z - s;
                if f == 0 {
                    return true; // exact rational point
                }
                // Gradient (−2ax, −2by, 2z); minimum valuation over the
                // nonzero slots.
                let mut t = u32::MAX;
                if x != 0 {
                    t = t.min(val_p(2 * a * x, p));
                }
                if y != 0 {
                    t = t.min(val_p(2 * b * y, p));
                }
                if z != 0 {
                    t = t.min(val_p(2 * z, p));
                }
                if t != u32::MAX && val_p(f, p) > 2 * t {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_place_indefinite_forms() {
        assert!(local_isotropy(2, -3, Place::Real));
        assert!(local_isotropy(-5, 1, Place::Real));
        assert!(!local_isotropy(-1, -1, Place::Real));
    }

    #[test]
    fn square_first_argument_is_always_isotropic() {
        for &p in &[2u64, 3, 5, 7, 11] {
            assert!(local_isotropy(1, 7, Place::Finite(p)));
            assert!(local_isotropy(1, -7, Place::Finite(p)));
        }
    }

    #[test]
    fn known_anisotropic_cases() {
        // Hamilton-type form z² = −x² − y² is anisotropic over ℚ₂.
        assert!(!local_isotropy(-1, -1, Place::Finite(2)));
        assert!(local_isotropy(-1, -1, Place::Finite(3)));
        assert!(local_isotropy(-1, -1, Place::Finite(5)));
    }

    #[test]
    fn valuation_cases_at_odd_primes() {
        // (p, u): isotropic at p iff u is a square mod p.
        assert!(local_isotropy(3, 1, Place::Finite(3)));
        assert!(!local_isotropy(3, 2, Place::Finite(3)));
        // (p·u, p·v): isotropic iff −uv is a square mod p.
        assert!(!local_isotropy(3, 3, Place::Finite(3))); // −1 non-square mod 3
        assert!(local_isotropy(3, 6, Place::Finite(3))); // −2 ≡ 1 square mod 3
    }

    #[test]
    fn unit_unit_at_odd_prime_is_isotropic() {
        for &(a, b) in &[(2, 5), (-2, 7), (4, -11), (10, 14)] {
            assert!(local_isotropy(a, b, Place::Finite(3)));
        }
    }
}
