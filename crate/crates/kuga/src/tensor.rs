//! The two-sided action of a pair of definite quaternions on the algebra
//! itself, realizing the tensor product of two copies of the algebra as the
//! full 4-by-4 real matrix algebra, and its restriction to norm-one pairs as
//! rotations of 4-space.

use exact_core::{rat, Matrix, Rational};
use num_traits::One;
use quaternion::Quaternion;

use crate::error::KugaError;

fn require_definite_pair(p: &Quaternion, q: &Quaternion) -> Result<(), KugaError> {
    for side in [p, q] {
        let a = side.algebra().a();
        let b = side.algebra().b();
        if *a != rat(-1) || *b != rat(-1) {
            return Err(KugaError::UnsuitableAlgebra {
                reason: format!(
                    "the two-sided action is defined on the algebra with parameters (-1, -1), got ({}, {})",
                    exact_core::format_rational(a),
                    exact_core::format_rational(b)
                ),
                hint: "construct both factors in the definite algebra with a = b = -1".to_string(),
            });
        }
    }
    Ok(())
}

/// The matrix of `v -> p v conj(q)` on the basis 1, x, y, xy; this is the
/// image of the simple tensor p (x) q.
pub fn tensor_image(p: &Quaternion, q: &Quaternion) -> Result<Matrix<Rational>, KugaError> {
    require_definite_pair(p, q)?;
    let q_bar = q.conjugate();
    let basis = p.algebra().basis();
    let mut columns = Vec::with_capacity(4);
    for e in basis {
        let image = p.clone() * e * q_bar.clone();
        columns.push(image.coords().clone());
    }
    Ok(Matrix::from_fn(4, 4, |r, c| columns[c][r].clone()))
}

/// The images of the sixteen basis tensors e_i (x) e_j, with j varying
/// fastest; together they span the full matrix algebra.
pub fn h_tensor_h_iso() -> Vec<Matrix<Rational>> {
    let h = quaternion::QuaternionAlgebra::from_integers(-1, -1)
        .expect("(-1, -1) is a valid parameter pair");
    let basis = h.basis();
    let mut images = Vec::with_capacity(16);
    for p in &basis {
        for q in &basis {
            images.push(tensor_image(p, q).expect("basis elements live in the right algebra"));
        }
    }
    images
}

/// The rotation of 4-space induced by a pair of norm-one quaternions; the
/// result is orthogonal with determinant 1.
pub fn su2su2_to_so4(p: &Quaternion, q: &Quaternion) -> Result<Matrix<Rational>, KugaError> {
    require_definite_pair(p, q)?;
    for side in [p, q] {
        let norm = side.reduced_norm();
        if !norm.is_one() {
            return Err(KugaError::NotNormOne(exact_core::format_rational(&norm)));
        }
    }
    let image = tensor_image(p, q)?;
    debug_assert_eq!(
        &image.transpose() * &image,
        Matrix::identity(4),
        "norm-one pairs must act orthogonally"
    );
    debug_assert_eq!(image.det(), rat(1), "the action must preserve orientation");
    Ok(image)
}
