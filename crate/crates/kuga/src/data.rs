//! The assembled fiber-space data (group generators, representation,
//! lattice, symmetric form) and its full certificate.

use exact_core::{qf_sign, Matrix, QuadScalar, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::KugaError;
use crate::form::symplectic_form_e;
use crate::fuchsian::FuchsianElement;
use crate::report::CertificateReport;
use crate::zlattice::{integral_coordinates, ZLattice};

/// Immutable fiber-space data: a fiber dimension `g`, group generators with
/// their representation images, a rank-2g lattice of g-by-2 matrices, and a
/// symmetric matrix S defining the alternating form E.
#[derive(Debug, Clone)]
pub struct KugaData {
    g: usize,
    gamma_gens: Vec<FuchsianElement>,
    rho_images: Vec<Matrix<QuadScalar>>,
    lattice: Vec<Matrix<QuadScalar>>,
    s: Matrix<QuadScalar>,
}

impl KugaData {
    /// Assembles the data after shape validation; deeper invariants are
    /// certified by [`check_kuga_data`].
    pub fn new(
        g: usize,
        gamma_gens: Vec<FuchsianElement>,
        rho_images: Vec<Matrix<QuadScalar>>,
        lattice: Vec<Matrix<QuadScalar>>,
        s: Matrix<QuadScalar>,
    ) -> Result<Self, KugaError> {
        if g == 0 {
            return Err(KugaError::ShapeMismatch(
                "fiber dimension g must be positive".to_string(),
            ));
        }
        if rho_images.len() != gamma_gens.len() {
            return Err(KugaError::ShapeMismatch(format!(
                "{} generators but {} representation images",
                gamma_gens.len(),
                rho_images.len()
            )));
        }
        for (k, rho) in rho_images.iter().enumerate() {
            if rho.row_count() != g || rho.col_count() != g {
                return Err(KugaError::ShapeMismatch(format!(
                    "representation image {} is {}x{}, expected {g}x{g}",
                    k + 1,
                    rho.row_count(),
                    rho.col_count()
                )));
            }
        }
        if lattice.len() < 2 * g {
            return Err(KugaError::ShapeMismatch(format!(
                "lattice needs at least {} generators, got {}",
                2 * g,
                lattice.len()
            )));
        }
        for (k, gen) in lattice.iter().enumerate() {
            if gen.row_count() != g || gen.col_count() != 2 {
                return Err(KugaError::ShapeMismatch(format!(
                    "lattice generator {} is {}x{}, expected {g}x2",
                    k + 1,
                    gen.row_count(),
                    gen.col_count()
                )));
            }
        }
        if s.row_count() != g || s.col_count() != g {
            return Err(KugaError::ShapeMismatch(format!(
                "S is {}x{}, expected {g}x{g}",
                s.row_count(),
                s.col_count()
            )));
        }
        let data = KugaData {
            g,
            gamma_gens,
            rho_images,
            lattice,
            s,
        };
        data.unified_radicand()?;
        Ok(data)
    }

    /// The fiber complex dimension.
    pub fn g(&self) -> usize {
        self.g
    }

    /// The group generators.
    pub fn gamma_gens(&self) -> &[FuchsianElement] {
        &self.gamma_gens
    }

    /// The representation images, aligned with [`KugaData::gamma_gens`].
    pub fn rho_images(&self) -> &[Matrix<QuadScalar>] {
        &self.rho_images
    }

    /// The lattice generators.
    pub fn lattice(&self) -> &[Matrix<QuadScalar>] {
        &self.lattice
    }

    /// The symmetric matrix defining E.
    pub fn s(&self) -> &Matrix<QuadScalar> {
        &self.s
    }

    /// Checks that every scalar in the data lives in one quadratic field and
    /// returns its radicand (1 when everything is rational).
    pub fn unified_radicand(&self) -> Result<BigInt, KugaError> {
        let mut radicand = BigInt::one();
        let mut absorb = |s: &QuadScalar| -> Result<(), KugaError> {
            // Rational scalars always carry radicand 1 and mix freely.
            if s.radicand().is_one() {
                return Ok(());
            }
            if radicand.is_one() {
                radicand = s.radicand().clone();
            } else if radicand != *s.radicand() {
                return Err(KugaError::MixedFields(format!(
                    "data mixes sqrt({}) with sqrt({})",
                    radicand,
                    s.radicand()
                )));
            }
            Ok(())
        };
        for m in self
            .rho_images
            .iter()
            .chain(self.lattice.iter())
            .chain(std::iter::once(&self.s))
        {
            for entry in m.entries() {
                absorb(entry)?;
            }
        }
        for gamma in &self.gamma_gens {
            for entry in gamma.matrix().entries() {
                absorb(entry)?;
            }
        }
        Ok(radicand)
    }

    /// The lattice generators flattened to rational vectors of length 4g
    /// (base and radical coefficient per entry).
    pub fn lattice_flat(&self) -> Vec<Vec<Rational>> {
        self.lattice.iter().map(flatten_real_matrix).collect()
    }

    /// The integral span of the flattened lattice generators.
    pub fn zlattice(&self) -> Result<ZLattice, KugaError> {
        ZLattice::from_rational_rows(&self.lattice_flat())
    }

    /// Resolves the representation image of a group element: the identity,
    /// a listed generator or its inverse, or anything when the
    /// representation is trivial.
    pub fn rho_of(&self, gamma: &FuchsianElement) -> Result<Matrix<QuadScalar>, KugaError> {
        if gamma.is_identity() {
            return Ok(Matrix::identity(self.g));
        }
        for (gen, rho) in self.gamma_gens.iter().zip(&self.rho_images) {
            if gamma == gen {
                return Ok(rho.clone());
            }
            if *gamma == gen.inverse() {
                return rho.inverse().ok_or_else(|| {
                    KugaError::UnresolvedRepresentation(
                        "representation image is singular".to_string(),
                    )
                });
            }
        }
        if self
            .rho_images
            .iter()
            .all(|rho| *rho == Matrix::identity(self.g))
        {
            return Ok(Matrix::identity(self.g));
        }
        Err(KugaError::UnresolvedRepresentation(format!(
            "{} is not a listed generator and the representation is nontrivial",
            gamma
        )))
    }

    /// The transported lattice generator rho(gamma) * alpha * gamma^{-1}.
    pub fn transport(
        &self,
        rho: &Matrix<QuadScalar>,
        gamma: &FuchsianElement,
        alpha: &Matrix<QuadScalar>,
    ) -> Matrix<QuadScalar> {
        &(rho * alpha) * gamma.inverse().matrix()
    }

    /// The integer matrix of a group element's action on the lattice basis:
    /// column j holds the coordinates of the transported generator j.
    pub fn transport_matrix(
        &self,
        rho: &Matrix<QuadScalar>,
        gamma: &FuchsianElement,
    ) -> Result<Option<Matrix<Rational>>, KugaError> {
        let flat = self.lattice_flat();
        let n = self.lattice.len();
        let mut columns = Vec::with_capacity(n);
        for alpha in &self.lattice {
            let image = self.transport(rho, gamma, alpha);
            match integral_coordinates(&flat, &flatten_real_matrix(&image))? {
                Some(coords) => columns.push(coords),
                None => return Ok(None),
            }
        }
        Ok(Some(Matrix::from_fn(n, n, |i, j| {
            Rational::from(columns[j][i].clone())
        })))
    }
}

/// Flattens a matrix over a quadratic field to the rational vector of its
/// base parts followed by its radical coefficients, entry by entry.
pub fn flatten_real_matrix(m: &Matrix<QuadScalar>) -> Vec<Rational> {
    let mut flat = Vec::with_capacity(2 * m.row_count() * m.col_count());
    for entry in m.entries() {
        flat.push(entry.base().clone());
        flat.push(entry.coeff().clone());
    }
    flat
}

/// Certifies every structural invariant of the data, one report entry per
/// named check, with witnesses on failure.
pub fn check_kuga_data(data: &KugaData) -> CertificateReport {
    let mut report = CertificateReport::new();
    let g = data.g();
    let s = data.s();

    // S symmetric.
    let mut asym = None;
    'sym: for i in 0..g {
        for j in i + 1..g {
            if s[(i, j)] != s[(j, i)] {
                asym = Some((i, j));
                break 'sym;
            }
        }
    }
    match asym {
        None => report.pass("s-symmetric"),
        Some((i, j)) => report.fail(
            "s-symmetric",
            format!(
                "entries ({}, {}) and ({}, {}) differ: {} vs {}",
                i + 1,
                j + 1,
                j + 1,
                i + 1,
                s[(i, j)],
                s[(j, i)]
            ),
        ),
    }

    // S positive definite via leading principal minors.
    let mut bad_minor = None;
    for k in 1..=g {
        let minor = s.leading_principal_minor(k);
        if qf_sign(minor.base(), minor.coeff(), minor.radicand()) <= 0 {
            bad_minor = Some((k, minor));
            break;
        }
    }
    match bad_minor {
        None => report.pass("s-positive-definite"),
        Some((k, minor)) => report.fail(
            "s-positive-definite",
            format!("leading minor {k} is {minor}, not positive"),
        ),
    }

    // rho(gamma)^t S rho(gamma) = S for every generator.
    for (k, rho) in data.rho_images().iter().enumerate() {
        let name = format!("rho-s-orthogonal-gen-{}", k + 1);
        let conjugated = &(&rho.transpose() * s) * rho;
        if conjugated == *s {
            report.pass(name);
        } else {
            let witness = (0..g)
                .flat_map(|i| (0..g).map(move |j| (i, j)))
                .find(|&(i, j)| conjugated[(i, j)] != s[(i, j)])
                .map(|(i, j)| {
                    format!(
                        "entry ({}, {}): {} vs {}",
                        i + 1,
                        j + 1,
                        conjugated[(i, j)],
                        s[(i, j)]
                    )
                })
                .unwrap_or_default();
            report.fail(name, witness);
        }
    }

    // Lattice rank is exactly 2g.
    match data.zlattice() {
        Ok(lattice) if lattice.rank() == 2 * g => report.pass("lattice-rank"),
        Ok(lattice) => report.fail(
            "lattice-rank",
            format!("integral rank {} instead of {}", lattice.rank(), 2 * g),
        ),
        Err(e) => report.fail("lattice-rank", e.to_string()),
    }

    // Lattice invariance with unimodular transport, generator by generator.
    for (k, (gamma, rho)) in data
        .gamma_gens()
        .iter()
        .zip(data.rho_images())
        .enumerate()
    {
        let name = format!("lattice-invariance-gen-{}", k + 1);
        match data.transport_matrix(rho, gamma) {
            Ok(Some(t)) => {
                let det = t.det();
                if det.abs() == Rational::one() {
                    report.pass(name);
                } else {
                    report.fail(name, format!("transport determinant {det}, expected ±1"));
                }
            }
            Ok(None) => report.fail(name, "a transported generator escapes the lattice"),
            Err(e) => report.fail(name, e.to_string()),
        }
    }

    // E integral on all lattice generator pairs.
    let n = data.lattice().len();
    let mut offender = None;
    'pairs: for i in 0..n {
        for j in 0..n {
            match symplectic_form_e(s, &data.lattice()[i], &data.lattice()[j]) {
                Ok(value) => {
                    let integral = value
                        .to_rational()
                        .map(|r| r.is_integer())
                        .unwrap_or(false);
                    if !integral {
                        offender = Some((i, j, value.to_string()));
                        break 'pairs;
                    }
                }
                Err(e) => {
                    offender = Some((i, j, e.to_string()));
                    break 'pairs;
                }
            }
        }
    }
    match offender {
        None => report.pass("e-integrality"),
        Some((i, j, value)) => report.fail(
            "e-integrality",
            format!("E on pair ({}, {}) is {}", i + 1, j + 1, value),
        ),
    }

    report
}
