//! Assembly of the fiber-space data attached to an order in an indefinite
//! division quaternion algebra: the order embeds as the lattice, the
//! norm-one generators act through the base, and the symmetric matrix
//! diag(1, -b) (suitably scaled) polarizes the fibers.

use exact_core::{Matrix, QuadScalar, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use quaternion::{classify_algebra, MatrixEmbedding, Quaternion};

use orders::{
    format_word, is_maximal, reduced_discriminant, torsion_screening, verify_order, QuatOrder,
    TorsionScreen,
};

use crate::data::{check_kuga_data, KugaData};
use crate::error::KugaError;
use crate::form::{e_gram, j2, symplectic_form_e};
use crate::fuchsian::FuchsianElement;
use crate::report::CertificateReport;

/// How to scale the symmetric matrix diag(1, -b).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScaleChoice {
    /// Use the smallest positive integer making E integral on the lattice.
    Auto,
    /// Use the given positive integer.
    Fixed(BigInt),
}

/// The assembled data together with its certificate and the scaling used.
#[derive(Debug, Clone)]
pub struct BuildOutcome {
    /// The assembled fiber-space data.
    pub data: KugaData,
    /// Warnings and the full structural certificate.
    pub report: CertificateReport,
    /// The scale actually applied to diag(1, -b).
    pub scale: BigInt,
    /// The least scale that clears every denominator of E (the auto choice).
    pub denominator_lcm: BigInt,
    /// The Gram matrix of E on the lattice generators after scaling.
    pub integral_gram: Matrix<Rational>,
}

fn unscaled_s(b: &Rational) -> Matrix<QuadScalar> {
    Matrix::from_rows(vec![
        vec![QuadScalar::integer(1), QuadScalar::integer(0)],
        vec![QuadScalar::integer(0), QuadScalar::rational(-b.clone())],
    ])
    .expect("2x2 rows are rectangular")
}

/// Builds the fiber-space data for `order` with the given norm-one
/// generators, screening words up to `screening_radius` for torsion.
pub fn build_false_elliptic(
    order: &QuatOrder,
    gens: &[Quaternion],
    scale: ScaleChoice,
    screening_radius: usize,
) -> Result<BuildOutcome, KugaError> {
    let algebra = order.algebra();
    let class = classify_algebra(algebra.a(), algebra.b())?;
    if !class.division {
        return Err(KugaError::UnsuitableAlgebra {
            reason: "the algebra is a matrix algebra, so the fiber tori degenerate".to_string(),
            hint: "choose parameters with a nonempty ramification set".to_string(),
        });
    }
    if class.definite {
        return Err(KugaError::UnsuitableAlgebra {
            reason: "the algebra is ramified at the real place, so there is no base action"
                .to_string(),
            hint: "choose an indefinite presentation, for example with a > 0".to_string(),
        });
    }
    let embedding = MatrixEmbedding::new(algebra)?;
    if !algebra.b().is_negative() {
        return Err(KugaError::UnsuitableAlgebra {
            reason: format!(
                "diag(1, -b) must be positive definite, which needs b < 0, got b = {}",
                exact_core::format_rational(algebra.b())
            ),
            hint: "(a, b) is isomorphic to (a, -a*b); present the algebra with b < 0".to_string(),
        });
    }
    verify_order(order).map_err(|v| KugaError::NotAnOrder(v.to_string()))?;
    for gen in gens {
        if gen.algebra() != algebra {
            return Err(KugaError::ShapeMismatch(
                "generator belongs to a different algebra than the order".to_string(),
            ));
        }
    }
    match torsion_screening(gens, screening_radius).map_err(KugaError::Order)? {
        TorsionScreen::TorsionFound { word, order } => {
            return Err(KugaError::TorsionInGenerators {
                word: format_word(&word),
                order,
            })
        }
        TorsionScreen::Clean { .. } => {}
    }
    let fuchsian: Vec<FuchsianElement> = gens
        .iter()
        .map(|g| FuchsianElement::new(&embedding, g.clone()))
        .collect::<Result<_, _>>()?;
    let lattice: Vec<Matrix<QuadScalar>> =
        order.basis().iter().map(|e| embedding.image(e)).collect();

    // The least positive integer scale clearing every denominator of E.
    let s_unit = unscaled_s(algebra.b());
    let mut lcm = BigInt::one();
    for alpha in &lattice {
        for beta in &lattice {
            let value = symplectic_form_e(&s_unit, alpha, beta)?;
            let rational = value.to_rational().ok_or_else(|| {
                KugaError::MixedFields(format!(
                    "E takes the irrational value {value} on the lattice"
                ))
            })?;
            lcm = lcm.lcm(rational.denom());
        }
    }
    let scale_value = match scale {
        ScaleChoice::Auto => lcm.clone(),
        ScaleChoice::Fixed(m) => {
            if !m.is_positive() {
                return Err(KugaError::ShapeMismatch(format!(
                    "scale must be a positive integer, got {m}"
                )));
            }
            m
        }
    };
    let scale_scalar = QuadScalar::rational(Rational::from_integer(scale_value.clone()));
    let s = s_unit.map(|e| scale_scalar.clone() * e.clone());

    let rho_images = vec![Matrix::identity(2); fuchsian.len()];
    let data = KugaData::new(2, fuchsian, rho_images, lattice, s)?;

    let mut report = CertificateReport::new();
    match is_maximal(order).map_err(KugaError::Order)? {
        true => report.pass("order-maximality"),
        false => {
            let discrd = reduced_discriminant(order).map_err(KugaError::Order)?;
            report.warn(
                "order-maximality",
                format!(
                    "reduced discriminant {discrd} exceeds the algebra discriminant {}; the order is not maximal",
                    class.discriminant
                ),
            );
        }
    }
    report.merge(check_kuga_data(&data));
    let integral_gram = e_gram(&data)?;
    Ok(BuildOutcome {
        data,
        report,
        scale: scale_value,
        denominator_lcm: lcm,
        integral_gram,
    })
}

/// Evaluates both sides of the trace identity connecting the bilinear form
/// to quaternion multiplication: for the matrices A, B of alpha, beta,
/// `E(alpha, beta) = tr(A^t diag(1,-b) B J)` must equal `tr(Y A adj(B))`
/// with Y the matrix of the second algebra generator.  Returns (lhs, rhs,
/// equal).
pub fn shimura_form_identity(
    alpha: &Quaternion,
    beta: &Quaternion,
) -> Result<(QuadScalar, QuadScalar, bool), KugaError> {
    let algebra = alpha.algebra();
    if beta.algebra() != algebra {
        return Err(KugaError::ShapeMismatch(
            "the two elements belong to different algebras".to_string(),
        ));
    }
    if !algebra.b().is_negative() {
        return Err(KugaError::UnsuitableAlgebra {
            reason: format!(
                "the identity uses diag(1, -b) with b < 0, got b = {}",
                exact_core::format_rational(algebra.b())
            ),
            hint: "(a, b) is isomorphic to (a, -a*b); present the algebra with b < 0".to_string(),
        });
    }
    let embedding = MatrixEmbedding::new(algebra)?;
    let a_mat = embedding.image(alpha);
    let b_mat = embedding.image(beta);
    let y_mat = embedding.image(&algebra.y());
    let s_unit = unscaled_s(algebra.b());
    let lhs = symplectic_form_e(&s_unit, &a_mat, &b_mat)?;
    // adj(B) = J^{-1} B^t J, the matrix of the conjugate quaternion.
    let j = j2();
    let j_inv = j.map(|e| -e.clone());
    let adj_b = &(&j_inv * &b_mat.transpose()) * &j;
    let rhs = (&(&y_mat * &a_mat) * &adj_b).trace();
    let equal = lhs == rhs;
    Ok((lhs, rhs, equal))
}

/// Certifies that left multiplication by the matrix of `beta` defines an
/// endomorphism of every fiber: it commutes with the lattice action of each
/// generator and maps lattice generators into the lattice.
pub fn endomorphism_commutation(
    data: &KugaData,
    beta: &Quaternion,
) -> Result<CertificateReport, KugaError> {
    let embedding = data.gamma_gens()
        .first()
        .ok_or_else(|| {
            KugaError::ShapeMismatch("data has no generators to certify against".to_string())
        })?
        .embedding()
        .clone();
    if beta.algebra() != embedding.algebra() {
        return Err(KugaError::ShapeMismatch(
            "endomorphism belongs to a different algebra than the data".to_string(),
        ));
    }
    let b_mat = embedding.image(beta);
    let mut report = CertificateReport::new();

    // Commutation with each generator action alpha -> rho(gamma) alpha gamma^{-1}.
    for (k, (gamma, rho)) in data
        .gamma_gens()
        .iter()
        .zip(data.rho_images())
        .enumerate()
    {
        let name = format!("endo-commutes-gen-{}", k + 1);
        let mut witness = None;
        for (j, alpha) in data.lattice().iter().enumerate() {
            let acted_then_multiplied = &b_mat * &data.transport(rho, gamma, alpha);
            let multiplied_then_acted = data.transport(rho, gamma, &(&b_mat * alpha));
            if acted_then_multiplied != multiplied_then_acted {
                witness = Some(format!(
                    "generator {} does not commute on lattice generator {}",
                    k + 1,
                    j + 1
                ));
                break;
            }
        }
        match witness {
            None => report.pass(name),
            Some(w) => report.fail(name, w),
        }
    }

    // The endomorphism must preserve the lattice.
    let flat = data.lattice_flat();
    let mut escape = None;
    for (j, alpha) in data.lattice().iter().enumerate() {
        let image = &b_mat * alpha;
        let coords =
            crate::zlattice::integral_coordinates(&flat, &crate::data::flatten_real_matrix(&image))?;
        if coords.is_none() {
            escape = Some(j);
            break;
        }
    }
    match escape {
        None => report.pass("endo-preserves-lattice"),
        Some(j) => report.fail(
            "endo-preserves-lattice",
            format!("the image of lattice generator {} escapes the lattice", j + 1),
        ),
    }
    Ok(report)
}
