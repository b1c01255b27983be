//! Frobenius normal basis for integral alternating forms.
//!
//! Given an integral skew-symmetric matrix `G` of size `2n`, produces an
//! integral change of basis `U` with `|det U| = 1` such that
//!
//! ```text
//! U^T G U = [ 0   D ]        D = diag(d_1, ..., d_n),  d_1 | d_2 | ... | d_n,  d_i > 0.
//!           [ -D  0 ]
//! ```
//!
//! The `d_i` (the alternating analogue of Smith invariant factors) are unique;
//! `U` is not, so a deterministic pivot rule pins the output down: among all
//! remaining index pairs the algorithm always selects the entry of smallest
//! absolute value, breaking ties by lowest row then lowest column, and when a
//! selected pivot is negative it negates the *second* vector of the pair.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ExactError;
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Computes the Frobenius normal basis of an integral alternating form.
///
/// Returns `(U, d)` where the columns of `U` are the new basis written in the
/// input coordinates (first all `e_i`, then all `f_i`, with `G(e_i, f_i) =
/// d_i`) and `d` is the divisor chain.  Rejects non-square, odd-dimensional,
/// non-integral and non-skew-symmetric input, and degenerate forms (with the
/// rank as a witness).
pub fn symplectic_frobenius_basis(
    g: &Matrix<Rational>,
) -> Result<(Matrix<Rational>, Vec<BigInt>), ExactError> {
    let dim = validate(g)?;
    let n = dim / 2;
    let gram: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| g[(i, j)].numer().clone()).collect())
        .collect();

    // Basis vectors in input coordinates, permuted and sheared in place; the
    // pairing of two basis vectors is recomputed from `gram` on demand (the
    // dimensions here are small enough that this costs nothing and avoids
    // delicate incremental bookkeeping).
    let mut basis: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let pairing = |basis: &Vec<Vec<BigInt>>, i: usize, j: usize| -> BigInt {
        let mut acc = BigInt::zero();
        for (r, row) in gram.iter().enumerate() {
            if basis[i][r].is_zero() {
                continue;
            }
            for (c, entry) in row.iter().enumerate() {
                if entry.is_zero() || basis[j][c].is_zero() {
                    continue;
                }
                acc += &basis[i][r] * entry * &basis[j][c];
            }
        }
        acc
    };

    let mut start_block = 0;
    'blocks: loop {
        for k in start_block..n {
            reduce_block(&mut basis, &pairing, k, dim).map_err(|rank| {
                // Everything before index 2k is already paired off, so the
                // form has rank exactly 2k.
                ExactError::DegenerateForm { rank }
            })?;
        }
        // Enforce the divisor chain d_1 | d_2 | ... | d_n.  Folding the next
        // block's first vector into e_k plants d_{k+1} back into block k,
        // where the gcd-reduction absorbs it; repeat until the chain holds.
        for k in 0..n - 1 {
            let d_k = pairing(&basis, 2 * k, 2 * k + 1);
            let d_next = pairing(&basis, 2 * k + 2, 2 * k + 3);
            if !(&d_next % &d_k).is_zero() {
                let fold = basis[2 * k + 2].clone();
                add_into(&mut basis[2 * k], &fold);
                start_block = k;
                continue 'blocks;
            }
        }
        break;
    }

    let deltas: Vec<BigInt> = (0..n).map(|k| pairing(&basis, 2 * k, 2 * k + 1)).collect();
    // Columns of U: e_1 .. e_n then f_1 .. f_n.
    let u = Matrix::from_fn(dim, dim, |i, j| {
        let col = if j < n { &basis[2 * j] } else { &basis[2 * (j - n) + 1] };
        Rational::from_integer(col[i].clone())
    });
    #[cfg(debug_assertions)]
    {
        assert_eq!(u.det().numer().abs(), BigInt::one());
        let transformed = &(&u.transpose() * g) * &u;
        assert!(
            is_canonical(&transformed, &deltas),
            "internal error: U^T G U is not in Frobenius normal form"
        );
    }
    Ok((u, deltas))
}

/// Brings the block at pair index `k` to normal form, assuming all earlier
/// blocks are finished and orthogonal to the working range `[2k, dim)`.
/// On degenerate input returns `Err(rank)`.
fn reduce_block(
    basis: &mut Vec<Vec<BigInt>>,
    pairing: &impl Fn(&Vec<Vec<BigInt>>, usize, usize) -> BigInt,
    k: usize,
    dim: usize,
) -> Result<(), usize> {
    let lo = 2 * k;
    loop {
        // Deterministic pivot: smallest |pairing|, then lowest (i, j).
        let mut best: Option<(BigInt, usize, usize)> = None;
        for i in lo..dim {
            for j in (i + 1)..dim {
                let val = pairing(basis, i, j);
                if val.is_zero() {
                    continue;
                }
                let mag = val.abs();
                let better = match &best {
                    None => true,
                    Some((m, _, _)) => mag < *m,
                };
                if better {
                    best = Some((mag, i, j));
                }
            }
        }
        let Some((_, i, j)) = best else {
            return Err(lo);
        };
        basis.swap(lo, i);
        basis.swap(lo + 1, j);
        let mut d = pairing(basis, lo, lo + 1);
        if d.is_negative() {
            negate(&mut basis[lo + 1]);
            d = -d;
        }

        // Clear the pairings of e_k and f_k against all later vectors.  Each
        // step leaves a remainder in [0, d); if any remainder survives, a
        // strictly smaller pivot now exists and the loop re-selects.
        for m in (lo + 2)..dim {
            let r_e = pairing(basis, lo, m);
            let q = r_e.div_floor(&d);
            if !q.is_zero() {
                let shear = scale(&basis[lo + 1], &q);
                sub_into(&mut basis[m], &shear);
            }
            let r_f = pairing(basis, lo + 1, m);
            let q = r_f.div_floor(&d);
            if !q.is_zero() {
                let shear = scale(&basis[lo], &(-q));
                sub_into(&mut basis[m], &shear);
            }
        }
        let clean = ((lo + 2)..dim).all(|m| {
            pairing(basis, lo, m).is_zero() && pairing(basis, lo + 1, m).is_zero()
        });
        if clean {
            return Ok(());
        }
    }
}

fn validate(g: &Matrix<Rational>) -> Result<usize, ExactError> {
    if !g.is_square() {
        return Err(ExactError::DimensionMismatch(format!(
            "alternating form must be square, got {}x{}",
            g.row_count(),
            g.col_count()
        )));
    }
    let dim = g.row_count();
    if dim % 2 != 0 {
        return Err(ExactError::DimensionMismatch(format!(
            "alternating form has odd dimension {dim}"
        )));
    }
    for i in 0..dim {
        for j in 0..dim {
            if !g[(i, j)].denom().is_one() {
                return Err(ExactError::Domain(format!(
                    "alternating form must be integral; entry ({i},{j}) = {}",
                    g[(i, j)]
                )));
            }
        }
    }
    if !g.is_skew_symmetric() {
        return Err(ExactError::Domain(
            "alternating form must be skew-symmetric with zero diagonal".into(),
        ));
    }
    Ok(dim)
}

fn is_canonical(form: &Matrix<Rational>, deltas: &[BigInt]) -> bool {
    let n = deltas.len();
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if i < n && j >= n && j - n == i {
            Rational::from_integer(deltas[i].clone())
        } else if i >= n && j < n && i - n == j {
            -Rational::from_integer(deltas[j].clone())
        } else {
            Rational::zero()
        }
    }) == *form
}

fn negate(v: &mut [BigInt]) {
    for x in v {
        *x = -std::mem::take(x);
    }
}

fn scale(v: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    v.iter().map(|x| x * c).collect()
}

fn add_into(dst: &mut [BigInt], src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

fn sub_into(dst: &mut [BigInt], src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= s;
    }
}
