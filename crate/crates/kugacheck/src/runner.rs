//! Certificate orchestration for the `certify` subcommand.
//!
//! Once a spec validates, nothing here returns an error: every failure of
//! assembly or of an individual check is recorded as a report entry, and the
//! run always ends with a complete [`FullReport`].  Entry names are fixed and
//! indexed deterministically, so two runs on the same input produce
//! byte-identical reports.

use exact_core::{ComplexExactScalar, Matrix, QuadScalar, Rational};
use kuga::{
    build_elliptic_family, build_false_elliptic, check_kuga_data, endomorphism_commutation,
    fiber_isomorphism, fiber_lattice, fiber_product_data, gamma_lambda, period_matrix,
    riemann_conditions, shimura_form_identity, split_matrix_order, symplectic_form_e,
    CertificateReport, FuchsianElement, KugaData, KugaError, ScaleChoice,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use orders::{congruence_membership, QuatOrder};
use quaternion::{MatrixEmbedding, QuaternionAlgebra};
use std::collections::HashSet;

use crate::output::FullReport;
use crate::spec::{ConstructionSpec, Mode};

/// Tuning knobs for the certificate run.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    /// Word-ball radius for torsion screening and cocycle enumeration.
    pub word_ball: usize,
    /// Working precision, in bits, for interval fallbacks.
    pub numeric_bits: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            word_ball: 4,
            numeric_bits: 106,
        }
    }
}

fn merge_prefixed(report: &mut CertificateReport, prefix: &str, sub: &CertificateReport) {
    for entry in sub.entries() {
        report.push(
            format!("{prefix}{}", entry.name),
            entry.status,
            entry.witness.clone(),
        );
    }
}

/// Assembles the data for a raw spec with no construction-time screening:
/// the order basis becomes the lattice and the generators act through the
/// base, whether or not they would survive the screened build.
fn assemble_raw(spec: &ConstructionSpec) -> Result<(KugaData, CertificateReport), KugaError> {
    let order = spec.order.as_ref().expect("raw mode validated an order");
    let algebra = order.algebra();
    let embedding = MatrixEmbedding::new(algebra)?;
    let fuchsian: Vec<FuchsianElement> = spec
        .generators
        .iter()
        .map(|g| FuchsianElement::new(&embedding, g.clone()))
        .collect::<Result<_, _>>()?;
    let lattice: Vec<Matrix<QuadScalar>> =
        order.basis().iter().map(|e| embedding.image(e)).collect();
    let s_unit = Matrix::from_rows(vec![
        vec![QuadScalar::integer(1), QuadScalar::integer(0)],
        vec![QuadScalar::integer(0), QuadScalar::rational(-algebra.b().clone())],
    ])
    .expect("2x2 rows are rectangular");
    let scale_value = match &spec.scale {
        ScaleChoice::Fixed(m) => m.clone(),
        ScaleChoice::Auto => {
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
            lcm
        }
    };
    let scale_scalar = QuadScalar::rational(Rational::from_integer(scale_value));
    let s = s_unit.map(|e| scale_scalar.clone() * e.clone());
    let rho_images = vec![Matrix::identity(2); fuchsian.len()];
    let data = KugaData::new(2, fuchsian, rho_images, lattice, s)?;
    let report = check_kuga_data(&data);
    Ok((data, report))
}

/// Replaces the quadratic-form matrix and re-certifies the structural
/// invariants, keeping construction-side entries that do not depend on it.
fn apply_override(
    data: KugaData,
    built: CertificateReport,
    replacement: &Matrix<Rational>,
) -> Result<(KugaData, CertificateReport), KugaError> {
    let s = replacement.map(|r| QuadScalar::rational(r.clone()));
    let new_data = KugaData::new(
        data.g(),
        data.gamma_gens().to_vec(),
        data.rho_images().to_vec(),
        data.lattice().to_vec(),
        s,
    )?;
    let fresh = check_kuga_data(&new_data);
    let fresh_names: HashSet<&str> = fresh.entries().iter().map(|e| e.name.as_str()).collect();
    let mut report = CertificateReport::new();
    for entry in built.entries() {
        if !fresh_names.contains(entry.name.as_str()) {
            report.push(entry.name.clone(), entry.status, entry.witness.clone());
        }
    }
    report.merge(fresh);
    Ok((new_data, report))
}

fn assemble(
    spec: &ConstructionSpec,
    config: &RunConfig,
) -> Result<(KugaData, CertificateReport), KugaError> {
    let (data, report) = match spec.mode {
        Mode::FalseElliptic => {
            let order = spec.order.as_ref().expect("mode validated an order");
            let outcome = build_false_elliptic(
                order,
                &spec.generators,
                spec.scale.clone(),
                config.word_ball,
            )?;
            (outcome.data, outcome.report)
        }
        Mode::Elliptic => {
            let outcome = build_elliptic_family(spec.level, config.word_ball)?;
            (outcome.data, outcome.report)
        }
        Mode::RawKuga => assemble_raw(spec)?,
    };
    match spec.s_override.as_ref() {
        None => Ok((data, report)),
        Some(replacement) => apply_override(data, report, replacement),
    }
}

/// The order whose congruence subgroups the base group is screened against.
fn congruence_order(spec: &ConstructionSpec) -> Result<QuatOrder, KugaError> {
    match spec.order.as_ref() {
        Some(order) => Ok(order.clone()),
        None => {
            let algebra = QuaternionAlgebra::from_integers(1, 1)?;
            split_matrix_order(&algebra)
        }
    }
}

fn check_congruence(
    spec: &ConstructionSpec,
    data: &KugaData,
    report: &mut CertificateReport,
) {
    let order = match congruence_order(spec) {
        Ok(order) => order,
        Err(e) => {
            report.fail("congruence-level", e.to_string());
            return;
        }
    };
    let level = BigInt::from(spec.level);
    for (j, gamma) in data.gamma_gens().iter().enumerate() {
        let name = format!("congruence-level-gen-{}", j + 1);
        match congruence_membership(&order, gamma.quaternion(), &level) {
            Ok(true) => report.push(
                name,
                kuga::Status::Pass,
                Some(format!("congruent to 1 modulo {}", spec.level)),
            ),
            Ok(false) => report.fail(
                name,
                format!("generator is not congruent to 1 modulo {}", spec.level),
            ),
            Err(e) => report.fail(name, e.to_string()),
        }
    }
}

fn check_semidirect(data: &KugaData, report: &mut CertificateReport) {
    let embedding = match data.gamma_gens().first() {
        Some(gen) => gen.embedding().clone(),
        None => {
            report.fail("semidirect-kernel", "data has no generators");
            return;
        }
    };
    let kernel = (|| -> Result<bool, KugaError> {
        let lambda_1 = data.lattice()[0].clone();
        let lambda_2 = data.lattice()[1].clone();
        let first = gamma_lambda(data, FuchsianElement::identity(&embedding), lambda_1.clone())?;
        let second = gamma_lambda(data, FuchsianElement::identity(&embedding), lambda_2.clone())?;
        let product = first.multiply(&second)?;
        let sum = &lambda_1 + &lambda_2;
        Ok(product.lambda() == &sum && product.gamma() == &FuchsianElement::identity(&embedding))
    })();
    match kernel {
        Ok(true) => report.pass("semidirect-kernel"),
        Ok(false) => report.fail(
            "semidirect-kernel",
            "translations do not compose additively",
        ),
        Err(e) => report.fail("semidirect-kernel", e.to_string()),
    }

    let block_law = (|| -> Result<bool, KugaError> {
        let gens = data.gamma_gens();
        let first_gamma = gens[0].clone();
        let second_gamma = gens[gens.len() - 1].clone();
        let first = gamma_lambda(data, first_gamma, data.lattice()[0].clone())?;
        let second = gamma_lambda(data, second_gamma, data.lattice()[1].clone())?;
        let product = first.multiply(&second)?;
        let expected = &first.block_matrix() * &second.block_matrix();
        Ok(product.block_matrix() == expected)
    })();
    match block_law {
        Ok(true) => report.pass("semidirect-block-law"),
        Ok(false) => report.fail(
            "semidirect-block-law",
            "the block embedding is not multiplicative",
        ),
        Err(e) => report.fail("semidirect-block-law", e.to_string()),
    }
}

/// All products of the generators and their inverses of length at most
/// `max_len`, starting with the identity.
fn word_ball_elements(data: &KugaData, max_len: usize) -> Vec<FuchsianElement> {
    let gens = data.gamma_gens();
    let embedding = gens[0].embedding().clone();
    let mut letters = Vec::with_capacity(2 * gens.len());
    for gen in gens {
        letters.push(gen.clone());
        letters.push(gen.inverse());
    }
    let mut elements = vec![FuchsianElement::identity(&embedding)];
    let mut frontier = elements.clone();
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * letters.len());
        for element in &frontier {
            for letter in &letters {
                let product = element.clone() * letter.clone();
                next.push(product);
            }
        }
        elements.extend(next.iter().cloned());
        frontier = next;
    }
    elements
}

fn check_cocycle(
    data: &KugaData,
    tau: &ComplexExactScalar,
    prefix: &str,
    word_ball: usize,
    report: &mut CertificateReport,
) {
    let side = (word_ball / 2).max(1);
    let elements = word_ball_elements(data, side);
    let result = (|| -> Result<Option<(usize, usize)>, KugaError> {
        for (i, left) in elements.iter().enumerate() {
            for (j, right) in elements.iter().enumerate() {
                let moved = right.apply(tau)?;
                let lhs = (left.clone() * right.clone()).automorphy_factor(tau)?;
                let rhs = left.automorphy_factor(&moved)? * right.automorphy_factor(tau)?;
                if lhs != rhs {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    })();
    let name = format!("{prefix}cocycle");
    match result {
        Ok(None) => {
            let pairs = elements.len() * elements.len();
            report.push(
                name,
                kuga::Status::Pass,
                Some(format!("{pairs} word pairs agree at this base point")),
            );
        }
        Ok(Some((i, j))) => report.fail(
            name,
            format!("automorphy factors disagree on word pair ({i}, {j})"),
        ),
        Err(e) => report.fail(name, e.to_string()),
    }
}

fn check_iso_cocycle(
    data: &KugaData,
    tau: &ComplexExactScalar,
    prefix: &str,
    report: &mut CertificateReport,
) {
    let result = (|| -> Result<Option<(usize, usize, &'static str)>, KugaError> {
        let gens = data.gamma_gens();
        for (i, left) in gens.iter().enumerate() {
            for (j, right) in gens.iter().enumerate() {
                let product = left.clone() * right.clone();
                let moved = right.apply(tau)?;
                let whole = fiber_isomorphism(data, &product, tau)?;
                let outer = fiber_isomorphism(data, left, &moved)?;
                let inner = fiber_isomorphism(data, right, tau)?;
                let phi_product = &(outer.phi().clone()) * &(inner.phi().clone());
                if whole.phi() != &phi_product {
                    return Ok(Some((i, j, "linear parts")));
                }
                let transport_product = outer.transport() * inner.transport();
                if whole.transport() != &transport_product {
                    return Ok(Some((i, j, "lattice transports")));
                }
            }
        }
        Ok(None)
    })();
    let name = format!("{prefix}iso-cocycle");
    match result {
        Ok(None) => report.pass(name),
        Ok(Some((i, j, what))) => report.fail(
            name,
            format!("{what} fail to compose on generator pair ({}, {})", i + 1, j + 1),
        ),
        Err(e) => report.fail(name, e.to_string()),
    }
}

fn check_at_tau(
    data: &KugaData,
    tau: &ComplexExactScalar,
    index: usize,
    config: &RunConfig,
    report: &mut CertificateReport,
) {
    let prefix = format!("tau-{index}-");

    match riemann_conditions(data, tau, config.numeric_bits) {
        Ok(sub) => merge_prefixed(report, &prefix, &sub),
        Err(e) => report.fail(format!("{prefix}riemann-conditions"), e.to_string()),
    }

    let name = format!("{prefix}fiber-lattice");
    match fiber_lattice(data, tau) {
        Ok(_) => report.pass(name),
        Err(e) => report.fail(name, e.to_string()),
    }

    let name = format!("{prefix}period-relations");
    match period_matrix(data, tau) {
        Ok(period) => {
            let divisors: Vec<String> =
                period.delta().iter().map(|d| d.to_string()).collect();
            report.push(
                name,
                kuga::Status::Pass,
                Some(format!("elementary divisors {}", divisors.join(", "))),
            );
        }
        Err(e) => report.fail(name, e.to_string()),
    }

    for (j, gamma) in data.gamma_gens().iter().enumerate() {
        let name = format!("{prefix}fiber-transport-gen-{}", j + 1);
        match fiber_isomorphism(data, gamma, tau) {
            Ok(iso) => {
                let det = iso.transport().det();
                report.push(
                    name,
                    kuga::Status::Pass,
                    Some(format!("transport determinant {det}")),
                );
            }
            Err(e) => report.fail(name, e.to_string()),
        }
    }

    check_cocycle(data, tau, &prefix, config.word_ball, report);
    check_iso_cocycle(data, tau, &prefix, report);
}

fn check_shimura(spec: &ConstructionSpec, report: &mut CertificateReport) {
    let Some(order) = spec.order.as_ref() else {
        return;
    };
    if !order.algebra().b().is_negative() {
        report.warn(
            "shimura-identity",
            "the trace identity needs a presentation with negative second parameter; skipped",
        );
        return;
    }
    let result = (|| -> Result<Option<(usize, usize, String, String)>, KugaError> {
        for (i, alpha) in order.basis().iter().enumerate() {
            for (j, beta) in order.basis().iter().enumerate() {
                let (lhs, rhs, equal) = shimura_form_identity(alpha, beta)?;
                if !equal {
                    return Ok(Some((i, j, lhs.to_string(), rhs.to_string())));
                }
            }
        }
        Ok(None)
    })();
    match result {
        Ok(None) => report.push(
            "shimura-identity",
            kuga::Status::Pass,
            Some("16 basis pairs agree".to_string()),
        ),
        Ok(Some((i, j, lhs, rhs))) => report.fail(
            "shimura-identity",
            format!(
                "basis pair ({}, {}) disagrees: {} vs {}",
                i + 1,
                j + 1,
                lhs,
                rhs
            ),
        ),
        Err(e) => report.fail("shimura-identity", e.to_string()),
    }
}

fn check_endomorphisms(
    spec: &ConstructionSpec,
    data: &KugaData,
    report: &mut CertificateReport,
) {
    let Some(order) = spec.order.as_ref() else {
        return;
    };
    for (j, beta) in order.basis().iter().enumerate() {
        let prefix = format!("basis-{}-", j + 1);
        match endomorphism_commutation(data, beta) {
            Ok(sub) => merge_prefixed(report, &prefix, &sub),
            Err(e) => report.fail(format!("{prefix}endomorphism"), e.to_string()),
        }
    }
}

fn check_product(
    spec: &ConstructionSpec,
    data: &KugaData,
    report: &mut CertificateReport,
) {
    if spec.copies < 2 {
        return;
    }
    match fiber_product_data(data, spec.copies) {
        Ok(product) => {
            merge_prefixed(report, "product-", &check_kuga_data(&product));
            for (k, tau) in spec.taus.iter().enumerate() {
                let name = format!("product-tau-{}-period-relations", k + 1);
                match period_matrix(&product, tau) {
                    Ok(period) => {
                        let divisors: Vec<String> =
                            period.delta().iter().map(|d| d.to_string()).collect();
                        report.push(
                            name,
                            kuga::Status::Pass,
                            Some(format!("elementary divisors {}", divisors.join(", "))),
                        );
                    }
                    Err(e) => report.fail(name, e.to_string()),
                }
            }
        }
        Err(e) => report.fail("product-construction", e.to_string()),
    }
}

/// Runs the full certificate suite for a validated spec.
pub fn certify(spec: &ConstructionSpec, config: &RunConfig) -> FullReport {
    let mut report = CertificateReport::new();
    let data = match assemble(spec, config) {
        Ok((data, built)) => {
            report.merge(built);
            data
        }
        Err(e) => {
            report.fail("construction", e.to_string());
            return FullReport::new(&spec.digest, report);
        }
    };

    check_congruence(spec, &data, &mut report);
    check_semidirect(&data, &mut report);
    for (k, tau) in spec.taus.iter().enumerate() {
        check_at_tau(&data, tau, k + 1, config, &mut report);
    }
    check_shimura(spec, &mut report);
    check_endomorphisms(spec, &data, &mut report);
    check_product(spec, &data, &mut report);

    FullReport::new(&spec.digest, report)
}
