//! Exact 2x2 matrix models of quaternion algebras split by a real quadratic
//! field, and conjugation as a rational 4x4 matrix.

use exact_core::{exact_linear_solve, Matrix, QuadScalar, Rational};
use num_traits::Signed;

use crate::algebra::{Quaternion, QuaternionAlgebra};
use crate::error::QuatError;

/// The embedding of `(a, b)` into 2x2 matrices over `Q(sqrt(a))`, defined on
/// generators by
///
/// ```text
/// x -> [ sqrt(a)   0      ]      y -> [ 0   b ]
///      [ 0        -sqrt(a)]           [ 1   0 ]
/// ```
///
/// It exists whenever `a > 0`; the image of an element has determinant equal
/// to its reduced norm and trace equal to its reduced trace.
#[derive(Debug, Clone)]
pub struct MatrixEmbedding {
    algebra: QuaternionAlgebra,
    root_a: QuadScalar,
}

impl MatrixEmbedding {
    /// Prepares the embedding; fails for `a <= 0` with a hint describing how
    /// to re-present the algebra when that is possible.
    pub fn new(algebra: &QuaternionAlgebra) -> Result<Self, QuatError> {
        if !algebra.a().is_positive() {
            let hint = if algebra.b().is_positive() {
                format!(
                    "swap the generators: ({}, {}) presents the same algebra with a positive first parameter",
                    exact_core::format_rational(algebra.b()),
                    exact_core::format_rational(algebra.a()),
                )
            } else {
                "both parameters are negative, so the algebra is definite and has no real 2x2 matrix model".to_string()
            };
            return Err(QuatError::IndefinitePresentationNeeded {
                a: exact_core::format_rational(algebra.a()),
                hint,
            });
        }
        Ok(MatrixEmbedding {
            algebra: algebra.clone(),
            root_a: QuadScalar::sqrt_of(algebra.a())?,
        })
    }

    /// The algebra being embedded.
    pub fn algebra(&self) -> &QuaternionAlgebra {
        &self.algebra
    }

    /// `sqrt(a)` as an exact scalar (rational when `a` is a square).
    pub fn root_a(&self) -> &QuadScalar {
        &self.root_a
    }

    /// Image of an element: the matrix
    /// `[[t + u sqrt(a), b(v + w sqrt(a))], [v - w sqrt(a), t - u sqrt(a)]]`.
    ///
    /// Panics when the element belongs to a different algebra.
    pub fn image(&self, q: &Quaternion) -> Matrix<QuadScalar> {
        assert_eq!(
            q.algebra(),
            &self.algebra,
            "element belongs to a different algebra"
        );
        let [t, u, v, w] = q.coords();
        let b = QuadScalar::rational(self.algebra.b().clone());
        let t = QuadScalar::rational(t.clone());
        let u = QuadScalar::rational(u.clone());
        let v = QuadScalar::rational(v.clone());
        let w = QuadScalar::rational(w.clone());
        let ra = self.root_a.clone();
        Matrix::from_rows(vec![
            vec![
                t.clone() + u.clone() * ra.clone(),
                b * (v.clone() + w.clone() * ra.clone()),
            ],
            vec![v - w * ra.clone(), t - u * ra],
        ])
        .expect("2x2 shape")
    }
}

/// Conjugation `q -> g q g^-1` as a 4x4 rational matrix in the basis
/// `1, x, y, xy` (columns are the images of the basis elements).
///
/// Requires `g` invertible, i.e. of nonzero reduced norm.  The result always
/// fixes the first basis vector and has determinant 1.
pub fn conjugation_matrix_form(g: &Quaternion) -> Result<Matrix<Rational>, QuatError> {
    let g_inv = g.inverse()?;
    let columns: Vec<[Rational; 4]> = g
        .algebra()
        .basis()
        .iter()
        .map(|e| (g.clone() * e.clone() * g_inv.clone()).coords().clone())
        .collect();
    Ok(Matrix::from_fn(4, 4, |i, j| columns[j][i].clone()))
}

/// Expresses `q` in coordinates with respect to four given elements, when the
/// four elements span the algebra; the result is the coefficient column.
pub fn coords_in_basis(
    basis: &[Quaternion; 4],
    q: &Quaternion,
) -> Result<[Rational; 4], QuatError> {
    let a = Matrix::from_fn(4, 4, |i, j| basis[j].coords()[i].clone());
    let b = Matrix::from_fn(4, 1, |i, _| q.coords()[i].clone());
    let x = exact_linear_solve(&a, &b)?;
    Ok([
        x[(0, 0)].clone(),
        x[(1, 0)].clone(),
        x[(2, 0)].clone(),
        x[(3, 0)].clone(),
    ])
}
