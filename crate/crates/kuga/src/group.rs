//! Elements of the semidirect product of the Fuchsian group with the
//! lattice, their block-matrix realization, and their action on the total
//! space.

use exact_core::{ComplexExactScalar, Matrix, QuadScalar};

use crate::data::{flatten_real_matrix, KugaData};
use crate::error::KugaError;
use crate::fuchsian::{apply_real_matrix, real_times_complex, FuchsianElement};

/// A pair (gamma, lambda) of a group element and a lattice translation,
/// with gamma's representation image resolved once at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaLambdaElement {
    gamma: FuchsianElement,
    rho_gamma: Matrix<QuadScalar>,
    lambda: Matrix<QuadScalar>,
}

impl GammaLambdaElement {
    /// The group part.
    pub fn gamma(&self) -> &FuchsianElement {
        &self.gamma
    }

    /// The representation image of the group part.
    pub fn rho_gamma(&self) -> &Matrix<QuadScalar> {
        &self.rho_gamma
    }

    /// The translation part, a g-by-2 matrix.
    pub fn lambda(&self) -> &Matrix<QuadScalar> {
        &self.lambda
    }

    /// The faithful (g+2)-square block realization
    /// `[[rho(gamma), rho(gamma) lambda], [0, gamma]]`; block products match
    /// [`GammaLambdaElement::multiply`].
    pub fn block_matrix(&self) -> Matrix<QuadScalar> {
        let g = self.rho_gamma.row_count();
        let translated = &self.rho_gamma * &self.lambda;
        Matrix::from_fn(g + 2, g + 2, |i, j| {
            if i < g && j < g {
                self.rho_gamma[(i, j)].clone()
            } else if i < g {
                translated[(i, j - g)].clone()
            } else if j < g {
                QuadScalar::integer(0)
            } else {
                self.gamma.matrix()[(i - g, j - g)].clone()
            }
        })
    }

    /// The product, acting first by `rhs` and then by `self`:
    /// the group parts multiply and the translation becomes
    /// `lambda' + rho(gamma')^{-1} lambda gamma'`.
    pub fn multiply(&self, rhs: &GammaLambdaElement) -> Result<GammaLambdaElement, KugaError> {
        let rho_rhs_inv = rhs.rho_gamma.inverse().ok_or_else(|| {
            KugaError::UnresolvedRepresentation("representation image is singular".to_string())
        })?;
        let twisted = &(&rho_rhs_inv * &self.lambda) * rhs.gamma.matrix();
        let lambda = Matrix::from_fn(twisted.row_count(), 2, |i, j| {
            rhs.lambda[(i, j)].clone() + twisted[(i, j)].clone()
        });
        let product = GammaLambdaElement {
            gamma: self.gamma.clone() * rhs.gamma.clone(),
            rho_gamma: &self.rho_gamma * &rhs.rho_gamma,
            lambda,
        };
        debug_assert_eq!(
            product.block_matrix(),
            &self.block_matrix() * &rhs.block_matrix(),
            "block realization must be multiplicative"
        );
        Ok(product)
    }

    /// Applies the element to a point (z, tau) of the total space:
    /// `tau' = gamma tau` and `z' = rho(gamma) (z + lambda (tau, 1)^t) / (c tau + d)`.
    pub fn projective_action(
        &self,
        z: &[ComplexExactScalar],
        tau: &ComplexExactScalar,
    ) -> Result<(Vec<ComplexExactScalar>, ComplexExactScalar), KugaError> {
        let g = self.rho_gamma.row_count();
        if z.len() != g {
            return Err(KugaError::ShapeMismatch(format!(
                "fiber point has {} coordinates, expected {g}",
                z.len()
            )));
        }
        let tau_image = self.gamma.apply(tau)?;
        let factor_inv = self
            .gamma
            .automorphy_factor(tau)?
            .inv()
            .expect("automorphy factor of a determinant-one matrix is nonzero off the real axis");
        let mut shifted = Vec::with_capacity(g);
        for (i, z_i) in z.iter().enumerate() {
            let translation = real_times_complex(&self.lambda[(i, 0)], tau)?
                + ComplexExactScalar::real(self.lambda[(i, 1)].clone());
            shifted.push(z_i.clone() + translation);
        }
        let rotated = apply_real_matrix(&self.rho_gamma, &shifted)?;
        let image = rotated
            .into_iter()
            .map(|w| w * factor_inv.clone())
            .collect();
        Ok((image, tau_image))
    }
}

/// Builds (gamma, lambda), resolving rho(gamma) and requiring lambda to be a
/// lattice point.
pub fn gamma_lambda(
    data: &KugaData,
    gamma: FuchsianElement,
    lambda: Matrix<QuadScalar>,
) -> Result<GammaLambdaElement, KugaError> {
    if lambda.row_count() != data.g() || lambda.col_count() != 2 {
        return Err(KugaError::ShapeMismatch(format!(
            "lambda is {}x{}, expected {}x2",
            lambda.row_count(),
            lambda.col_count(),
            data.g()
        )));
    }
    let zlattice = data.zlattice()?;
    if !zlattice.contains(&flatten_real_matrix(&lambda))? {
        return Err(KugaError::OutsideLattice(format!(
            "translation part {lambda} is not a lattice point"
        )));
    }
    let rho_gamma = data.rho_of(&gamma)?;
    Ok(GammaLambdaElement {
        gamma,
        rho_gamma,
        lambda,
    })
}

/// The identity element (1, 0).
pub fn identity_element(data: &KugaData) -> Result<GammaLambdaElement, KugaError> {
    let embedding = data.gamma_gens()[0].embedding().clone();
    gamma_lambda(
        data,
        FuchsianElement::identity(&embedding),
        Matrix::zeros(data.g(), 2),
    )
}
