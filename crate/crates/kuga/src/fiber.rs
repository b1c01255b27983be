//! The fiber over a base point: the complex lattice it carries, a period
//! matrix in Frobenius form with verified bilinear relations, and the exact
//! isomorphism between fibers over group-equivalent points.

use exact_core::{
    symplectic_frobenius_basis, ComplexExactScalar, Matrix, QuadScalar, Rational,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::data::KugaData;
use crate::error::KugaError;
use crate::form::e_gram;
use crate::fuchsian::{complexify, real_times_complex, require_upper_half, FuchsianElement};

/// The complex vectors spanned by the lattice generators in the fiber over
/// one base point.
#[derive(Debug, Clone)]
pub struct FiberLattice {
    tau: ComplexExactScalar,
    vectors: Vec<Vec<ComplexExactScalar>>,
}

impl FiberLattice {
    /// The base point.
    pub fn tau(&self) -> &ComplexExactScalar {
        &self.tau
    }

    /// The lattice vectors, one complex g-vector per generator.
    pub fn vectors(&self) -> &[Vec<ComplexExactScalar>] {
        &self.vectors
    }
}

/// Evaluates one g-by-2 generator at tau: the column `alpha (tau, 1)^t`.
pub fn evaluate_generator(
    alpha: &Matrix<QuadScalar>,
    tau: &ComplexExactScalar,
) -> Result<Vec<ComplexExactScalar>, KugaError> {
    let mut v = Vec::with_capacity(alpha.row_count());
    for r in 0..alpha.row_count() {
        let value = real_times_complex(&alpha[(r, 0)], tau)?
            + ComplexExactScalar::real(alpha[(r, 1)].clone());
        v.push(value);
    }
    Ok(v)
}

/// Builds the fiber lattice at `tau` and certifies that the vectors are
/// linearly independent over the reals.
pub fn fiber_lattice(data: &KugaData, tau: &ComplexExactScalar) -> Result<FiberLattice, KugaError> {
    require_upper_half(tau)?;
    let n = data.lattice().len();
    let g = data.g();
    if n != 2 * g {
        return Err(KugaError::ShapeMismatch(format!(
            "{n} lattice generators cannot form a real basis of a {g}-dimensional fiber"
        )));
    }
    let mut vectors = Vec::with_capacity(n);
    for alpha in data.lattice() {
        vectors.push(evaluate_generator(alpha, tau)?);
    }
    // Real span: row k lists the real then imaginary parts of vector k.
    let real_matrix = Matrix::from_fn(n, n, |k, c| {
        if c < g {
            vectors[k][c].re().clone()
        } else {
            vectors[k][c - g].im().clone()
        }
    });
    if real_matrix.det().is_zero() {
        return Err(KugaError::DegenerateLattice(format!(
            "the {n} fiber vectors at tau = {tau} are linearly dependent over the reals"
        )));
    }
    Ok(FiberLattice {
        tau: tau.clone(),
        vectors,
    })
}

/// A period matrix in Frobenius form, together with the elementary divisors
/// and the basis change that produced it.
#[derive(Debug, Clone)]
pub struct PeriodData {
    big_period: Matrix<ComplexExactScalar>,
    delta: Vec<BigInt>,
    basis_change: Matrix<Rational>,
}

impl PeriodData {
    /// The g-by-2g period matrix, columns in Frobenius order.
    pub fn big_period(&self) -> &Matrix<ComplexExactScalar> {
        &self.big_period
    }

    /// The elementary divisors d_1 | d_2 | ... of the form E.
    pub fn delta(&self) -> &[BigInt] {
        &self.delta
    }

    /// The rational basis change U with U^t G U in split Frobenius form.
    pub fn basis_change(&self) -> &Matrix<Rational> {
        &self.basis_change
    }
}

fn block_m(delta: &[BigInt]) -> Matrix<Rational> {
    let g = delta.len();
    Matrix::from_fn(2 * g, 2 * g, |i, j| {
        if j == i + g {
            Rational::new(BigInt::one(), delta[i].clone())
        } else if i == j + g {
            -Rational::new(BigInt::one(), delta[j].clone())
        } else {
            Rational::zero()
        }
    })
}

/// Computes the period matrix at `tau` on a Frobenius basis of E and
/// verifies both bilinear period relations before returning it.
pub fn period_matrix(data: &KugaData, tau: &ComplexExactScalar) -> Result<PeriodData, KugaError> {
    require_upper_half(tau)?;
    let g = data.g();
    let n = data.lattice().len();
    if n != 2 * g {
        return Err(KugaError::ShapeMismatch(format!(
            "period matrix needs exactly {} lattice generators, got {n}",
            2 * g
        )));
    }
    let gram = e_gram(data)?;
    let (u, delta) = symplectic_frobenius_basis(&gram)?;

    // New basis beta_j = sum_i U[i][j] alpha_i, evaluated at tau.
    let mut columns = Vec::with_capacity(n);
    for j in 0..n {
        let beta = Matrix::from_fn(g, 2, |r, c| {
            let mut acc = QuadScalar::integer(0);
            for (i, alpha) in data.lattice().iter().enumerate() {
                acc = acc + QuadScalar::rational(u[(i, j)].clone()) * alpha[(r, c)].clone();
            }
            acc
        });
        columns.push(evaluate_generator(&beta, tau)?);
    }
    let big_period = Matrix::from_fn(g, n, |r, j| columns[j][r].clone());

    // First relation: Pi M Pi^t = 0 with M built from the inverse divisors.
    let m = block_m(&delta).map(|r| ComplexExactScalar::from_rationals(r.clone(), Rational::zero()));
    let pm = &big_period * &m;
    let first = &pm * &big_period.transpose();
    for i in 0..g {
        for j in 0..g {
            if !first[(i, j)].is_zero() {
                return Err(KugaError::PeriodRelations(format!(
                    "Pi M Pi^t has nonzero entry ({}, {}): {}",
                    i + 1,
                    j + 1,
                    first[(i, j)]
                )));
            }
        }
    }

    // Second relation: i Pi M conj(Pi)^t is Hermitian positive definite.
    let conj_t = big_period.map(|z| z.conjugate()).transpose();
    let h = (&pm * &conj_t).map(|z| ComplexExactScalar::i() * z.clone());
    for i in 0..g {
        for j in 0..g {
            if h[(i, j)] != h[(j, i)].conjugate() {
                return Err(KugaError::PeriodRelations(format!(
                    "i Pi M conj(Pi)^t is not Hermitian at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    for k in 1..=g {
        let minor = h.leading_principal_minor(k);
        let positive = minor.is_real() && minor.re().sign() > 0;
        if !positive {
            return Err(KugaError::PeriodRelations(format!(
                "leading minor {k} of i Pi M conj(Pi)^t is {minor}, not positive"
            )));
        }
    }

    Ok(PeriodData {
        big_period,
        delta,
        basis_change: u,
    })
}

/// The exact isomorphism between the fiber over `tau` and the fiber over
/// `gamma tau`.
#[derive(Debug, Clone)]
pub struct FiberIso {
    phi: Matrix<ComplexExactScalar>,
    transport: Matrix<Rational>,
    tau_image: ComplexExactScalar,
}

impl FiberIso {
    /// The complex-linear map between the fibers.
    pub fn phi(&self) -> &Matrix<ComplexExactScalar> {
        &self.phi
    }

    /// The unimodular matrix of the lattice transport in generator
    /// coordinates (column j expands the image of generator j).
    pub fn transport(&self) -> &Matrix<Rational> {
        &self.transport
    }

    /// The image base point.
    pub fn tau_image(&self) -> &ComplexExactScalar {
        &self.tau_image
    }
}

/// Builds and verifies the fiber isomorphism induced by `gamma` at `tau`:
/// `phi = rho(gamma) / (c tau + d)` matches the integral lattice transport
/// and preserves the form E.
pub fn fiber_isomorphism(
    data: &KugaData,
    gamma: &FuchsianElement,
    tau: &ComplexExactScalar,
) -> Result<FiberIso, KugaError> {
    let rho = data.rho_of(gamma)?;
    let tau_image = gamma.apply(tau)?;
    let factor_inv = gamma
        .automorphy_factor(tau)?
        .inv()
        .expect("automorphy factor is nonzero off the real axis");
    let phi = complexify(&rho).map(|z| z.clone() * factor_inv.clone());

    let transport = data
        .transport_matrix(&rho, gamma)?
        .ok_or_else(|| {
            KugaError::OutsideLattice(
                "a transported lattice generator escapes the lattice".to_string(),
            )
        })?;
    let det = transport.det();
    if det.abs() != Rational::one() {
        return Err(KugaError::OutsideLattice(format!(
            "lattice transport has determinant {det}, so the image is a proper sublattice"
        )));
    }
    let gram = e_gram(data)?;
    let preserved = &(&transport.transpose() * &gram) * &transport;
    if preserved != gram {
        return Err(KugaError::PeriodRelations(
            "lattice transport does not preserve the form E".to_string(),
        ));
    }

    // phi v_j(tau) must expand as sum_i T[i][j] v_i(tau') exactly.
    let source = fiber_lattice(data, tau)?;
    let target = fiber_lattice(data, &tau_image)?;
    let g = data.g();
    for (j, v) in source.vectors().iter().enumerate() {
        for r in 0..g {
            let mut lhs = ComplexExactScalar::from_rationals(Rational::zero(), Rational::zero());
            for c in 0..g {
                lhs = lhs + phi[(r, c)].clone() * v[c].clone();
            }
            let mut rhs = ComplexExactScalar::from_rationals(Rational::zero(), Rational::zero());
            for (i, w) in target.vectors().iter().enumerate() {
                let coeff = ComplexExactScalar::from_rationals(
                    transport[(i, j)].clone(),
                    Rational::zero(),
                );
                rhs = rhs + coeff * w[r].clone();
            }
            if lhs != rhs {
                return Err(KugaError::PeriodRelations(format!(
                    "fiber transport mismatch at generator {}, coordinate {}: {} vs {}",
                    j + 1,
                    r + 1,
                    lhs,
                    rhs
                )));
            }
        }
    }

    Ok(FiberIso {
        phi,
        transport,
        tau_image,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rat;
    use quaternion::{MatrixEmbedding, QuaternionAlgebra};

    fn toy_data() -> KugaData {
        let h = QuaternionAlgebra::from_integers(1, 1).unwrap();
        let e = MatrixEmbedding::new(&h).unwrap();
        KugaData::new(
            1,
            vec![FuchsianElement::identity(&e)],
            vec![Matrix::identity(1)],
            vec![
                Matrix::from_rows(vec![vec![QuadScalar::integer(1), QuadScalar::integer(0)]])
                    .unwrap(),
                Matrix::from_rows(vec![vec![QuadScalar::integer(0), QuadScalar::integer(1)]])
                    .unwrap(),
            ],
            Matrix::identity(1),
        )
        .unwrap()
    }

    #[test]
    fn fiber_vectors_at_i_are_i_and_one() {
        let data = toy_data();
        let fiber = fiber_lattice(&data, &ComplexExactScalar::i()).unwrap();
        assert_eq!(fiber.vectors()[0][0], ComplexExactScalar::i());
        assert_eq!(
            fiber.vectors()[1][0],
            ComplexExactScalar::from_rationals(rat(1), rat(0))
        );
    }

    #[test]
    fn period_matrix_in_frobenius_form_at_i() {
        let data = toy_data();
        let period = period_matrix(&data, &ComplexExactScalar::i()).unwrap();
        assert_eq!(period.delta(), [BigInt::from(1)]);
        // E(alpha_1, alpha_2) = -1, so the Frobenius basis is (alpha_1, -alpha_2)
        // and the period row is (i, -1).
        assert_eq!(period.big_period()[(0, 0)], ComplexExactScalar::i());
        assert_eq!(
            period.big_period()[(0, 1)],
            ComplexExactScalar::from_rationals(rat(-1), rat(0))
        );
    }

    #[test]
    fn period_relations_hold_across_sample_points() {
        let data = toy_data();
        for (re, im) in [(rat(1), rat(1)), (exact_core::ratio(1, 2), exact_core::ratio(3, 2))] {
            let tau = ComplexExactScalar::from_rationals(re, im);
            assert!(period_matrix(&data, &tau).is_ok());
        }
    }

    #[test]
    fn rotation_element_induces_the_expected_isomorphism() {
        // gamma = xy in the split algebra embeds as [[0, 1], [-1, 0]]; it
        // fixes i, and the fiber map there is multiplication by i.
        let data = toy_data();
        let h = data.gamma_gens()[0].embedding().algebra().clone();
        let e = data.gamma_gens()[0].embedding().clone();
        let gamma = FuchsianElement::new(&e, h.xy()).unwrap();
        let iso = fiber_isomorphism(&data, &gamma, &ComplexExactScalar::i()).unwrap();
        assert_eq!(*iso.tau_image(), ComplexExactScalar::i());
        assert_eq!(iso.phi()[(0, 0)], ComplexExactScalar::i());
        let t = iso.transport();
        assert_eq!(t[(0, 0)], rat(0));
        assert_eq!(t[(0, 1)], rat(1));
        assert_eq!(t[(1, 0)], rat(-1));
        assert_eq!(t[(1, 1)], rat(0));
    }

    #[test]
    fn half_lattice_rejects_the_frobenius_reduction() {
        // Halving one generator makes E non-integral; the reduction refuses.
        let h = QuaternionAlgebra::from_integers(1, 1).unwrap();
        let e = MatrixEmbedding::new(&h).unwrap();
        let half = QuadScalar::rational(exact_core::ratio(1, 2));
        let data = KugaData::new(
            1,
            vec![FuchsianElement::identity(&e)],
            vec![Matrix::identity(1)],
            vec![
                Matrix::from_rows(vec![vec![half, QuadScalar::integer(0)]]).unwrap(),
                Matrix::from_rows(vec![vec![QuadScalar::integer(0), QuadScalar::integer(1)]])
                    .unwrap(),
            ],
            Matrix::identity(1),
        )
        .unwrap();
        assert!(period_matrix(&data, &ComplexExactScalar::i()).is_err());
    }
}
