//! The complex structure on the real fiber coordinates induced by a point
//! of the upper half-plane.

use exact_core::{ComplexExactScalar, Matrix, QuadScalar};

use crate::error::KugaError;
use crate::fuchsian::require_upper_half;

/// The 2-by-2 real matrix J that turns row-pair coordinates at `tau` into
/// complex coordinates; it satisfies `J^2 = -I` and fixes the column
/// `(tau, 1)` up to the factor `-i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexStructureAtTau {
    tau: ComplexExactScalar,
    j: Matrix<QuadScalar>,
}

impl ComplexStructureAtTau {
    /// The base point.
    pub fn tau(&self) -> &ComplexExactScalar {
        &self.tau
    }

    /// The matrix J.
    pub fn j(&self) -> &Matrix<QuadScalar> {
        &self.j
    }

    /// The inverse `J^{-1} = -J`.
    pub fn j_inverse(&self) -> Matrix<QuadScalar> {
        self.j.map(|s| -s.clone())
    }
}

/// Builds the complex structure at `tau`:
/// `J = (1 / Im tau) [[-Re tau, |tau|^2], [-1, Re tau]]`.
pub fn complex_structure(tau: &ComplexExactScalar) -> Result<ComplexStructureAtTau, KugaError> {
    require_upper_half(tau)?;
    let re = tau.re().clone();
    let im_inv = tau
        .im()
        .inv()
        .expect("imaginary part is nonzero in the upper half-plane");
    let norm = tau.norm_sq();
    let j = Matrix::from_rows(vec![
        vec![-re.clone() * im_inv.clone(), norm * im_inv.clone()],
        vec![-im_inv.clone(), re * im_inv],
    ])
    .expect("2x2 rows are rectangular");
    debug_assert_eq!(
        &j * &j,
        Matrix::from_fn(2, 2, |i, k| QuadScalar::integer(if i == k { -1 } else { 0 })),
        "complex structure must square to -I"
    );
    Ok(ComplexStructureAtTau {
        tau: tau.clone(),
        j,
    })
}
