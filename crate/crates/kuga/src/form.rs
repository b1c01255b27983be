//! The alternating form E(alpha, beta) = tr(alpha^t S beta J2) and its Gram
//! matrix on the lattice generators.

use exact_core::{rat, Matrix, QuadScalar, Rational};

use crate::data::KugaData;
use crate::error::KugaError;

/// The standard 2x2 symplectic matrix [[0, 1], [-1, 0]].
pub fn j2() -> Matrix<QuadScalar> {
    Matrix::from_rows(vec![
        vec![QuadScalar::integer(0), QuadScalar::integer(1)],
        vec![QuadScalar::integer(-1), QuadScalar::integer(0)],
    ])
    .expect("fixed 2x2 shape")
}

/// Evaluates E(alpha, beta) = tr(alpha^t S beta J2).
pub fn symplectic_form_e(
    s: &Matrix<QuadScalar>,
    alpha: &Matrix<QuadScalar>,
    beta: &Matrix<QuadScalar>,
) -> Result<QuadScalar, KugaError> {
    let g = s.row_count();
    if !s.is_square() {
        return Err(KugaError::ShapeMismatch(format!(
            "S must be square, got {}x{}",
            s.row_count(),
            s.col_count()
        )));
    }
    for (name, m) in [("alpha", alpha), ("beta", beta)] {
        if m.row_count() != g || m.col_count() != 2 {
            return Err(KugaError::ShapeMismatch(format!(
                "{name} must be {g}x2, got {}x{}",
                m.row_count(),
                m.col_count()
            )));
        }
    }
    let product = &(&(&alpha.transpose() * s) * beta) * &j2();
    Ok(product.trace())
}

/// The Gram matrix of E on the lattice generators, demanded rational.
///
/// Values of E on the lattice are rational whenever the data is coherent;
/// a genuinely irrational value is reported as a mixed-field error.
pub fn e_gram(data: &KugaData) -> Result<Matrix<Rational>, KugaError> {
    let n = data.lattice().len();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let value = symplectic_form_e(data.s(), &data.lattice()[i], &data.lattice()[j])?;
            match value.to_rational() {
                Some(r) => row.push(r),
                None => {
                    return Err(KugaError::MixedFields(format!(
                        "E takes the irrational value {value} on lattice pair ({}, {})",
                        i + 1,
                        j + 1
                    )))
                }
            }
        }
        rows.push(row);
    }
    Matrix::from_rows(rows).map_err(|e| KugaError::ShapeMismatch(e.to_string()))
}

/// Convenience: E with a rational S on rational matrices, used by tests.
pub fn symplectic_form_e_rational(
    s: &Matrix<Rational>,
    alpha: &Matrix<Rational>,
    beta: &Matrix<Rational>,
) -> Result<Rational, KugaError> {
    let lift = |m: &Matrix<Rational>| m.map(|r| QuadScalar::rational(r.clone()));
    let value = symplectic_form_e(&lift(s), &lift(alpha), &lift(beta))?;
    Ok(value.to_rational().unwrap_or_else(|| rat(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::ratio;

    fn diag(entries: &[i64]) -> Matrix<QuadScalar> {
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                QuadScalar::integer(entries[i])
            } else {
                QuadScalar::integer(0)
            }
        })
    }

    #[test]
    fn form_is_alternating_and_bilinear() {
        let s = diag(&[1, 3]);
        let alpha = Matrix::from_fn(2, 2, |i, j| {
            QuadScalar::rational(ratio(3 * i as i64 + j as i64 + 1, 2))
        });
        let beta = Matrix::from_fn(2, 2, |i, j| QuadScalar::integer(i as i64 - 2 * j as i64));
        assert_eq!(
            symplectic_form_e(&s, &alpha, &alpha).unwrap(),
            QuadScalar::integer(0)
        );
        let e_ab = symplectic_form_e(&s, &alpha, &beta).unwrap();
        let e_ba = symplectic_form_e(&s, &beta, &alpha).unwrap();
        assert_eq!(e_ab.clone() + e_ba, QuadScalar::integer(0));
        let double = alpha.scaled(&QuadScalar::integer(2));
        assert_eq!(
            symplectic_form_e(&s, &double, &beta).unwrap(),
            e_ab * QuadScalar::integer(2)
        );
    }

    #[test]
    fn identity_against_y_image_gives_six() {
        // With S = diag(1, 3) and beta the matrix image of y in (2, -3),
        // E(1, y) = 6.
        let s = diag(&[1, 3]);
        let alpha = diag(&[1, 1]);
        let beta = Matrix::from_rows(vec![
            vec![QuadScalar::integer(0), QuadScalar::integer(-3)],
            vec![QuadScalar::integer(1), QuadScalar::integer(0)],
        ])
        .unwrap();
        assert_eq!(
            symplectic_form_e(&s, &alpha, &beta).unwrap(),
            QuadScalar::integer(6)
        );
    }

    #[test]
    fn shape_violations_are_reported() {
        let s = diag(&[1, 3]);
        let tall = Matrix::from_fn(3, 2, |_, _| QuadScalar::integer(1));
        assert!(matches!(
            symplectic_form_e(&s, &tall, &tall),
            Err(KugaError::ShapeMismatch(_))
        ));
    }
}
