//! Quaternion orders: verification, discriminant, maximality, unit search,
//! and congruence conditions.

use exact_core::{is_integer, rat, ExactError, Matrix, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use quaternion::{classify_algebra, coords_in_basis, Quaternion, QuaternionAlgebra, QuatError};
use thiserror::Error;

/// A lattice in a quaternion algebra, given by four basis elements.
///
/// Construction only checks that the four elements are linearly independent;
/// whether the lattice is actually an order (a unital subring) is decided by
/// [`verify_order`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuatOrder {
    algebra: QuaternionAlgebra,
    basis: [Quaternion; 4],
}

/// Why a lattice fails to be an order; each variant carries the witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderViolation {
    /// The four basis elements do not span the algebra.
    #[error("basis elements are linearly dependent")]
    DegenerateBasis,

    /// `1` has non-integral coordinates in the basis.
    #[error("the unit 1 is not in the lattice")]
    MissingUnit,

    /// A basis element has a non-integral reduced trace.
    #[error("basis element {element} has non-integral reduced trace {trace}")]
    TraceNotIntegral {
        /// Offending element, displayed.
        element: String,
        /// Its reduced trace.
        trace: String,
    },

    /// A basis element has a non-integral reduced norm.
    #[error("basis element {element} has non-integral reduced norm {norm}")]
    NormNotIntegral {
        /// Offending element, displayed.
        element: String,
        /// Its reduced norm.
        norm: String,
    },

    /// The product of two basis elements has coordinates outside `Z`.
    #[error("product of basis elements {i} and {j} escapes the lattice: {product}")]
    ProductEscapes {
        /// Index of the left factor (0-based).
        i: usize,
        /// Index of the right factor (0-based).
        j: usize,
        /// The escaping product, displayed.
        product: String,
    },
}

/// Errors from order-level computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    /// The lattice basis is degenerate.
    #[error("basis elements are linearly dependent")]
    DegenerateBasis,

    /// An operation required a norm-one element.
    #[error("element has reduced norm {0}, expected 1")]
    NotNormOne(String),

    /// Congruence level must be a positive integer.
    #[error("congruence level must be a positive integer, got {0}")]
    BadLevel(String),

    /// The discriminant bookkeeping is inconsistent.
    #[error("{0}")]
    InconsistentDiscriminant(String),

    /// Propagated quaternion-algebra error.
    #[error(transparent)]
    Quat(#[from] QuatError),

    /// Propagated exact-arithmetic error.
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl QuatOrder {
    /// Builds a lattice from four basis elements of `algebra`; fails with
    /// [`OrderError::DegenerateBasis`] when they are dependent.
    pub fn new(algebra: &QuaternionAlgebra, basis: [Quaternion; 4]) -> Result<Self, OrderError> {
        for q in &basis {
            assert_eq!(
                q.algebra(),
                algebra,
                "basis element belongs to a different algebra"
            );
        }
        let coord_matrix = Matrix::from_fn(4, 4, |i, j| basis[j].coords()[i].clone());
        if coord_matrix.det().is_zero() {
            return Err(OrderError::DegenerateBasis);
        }
        Ok(QuatOrder {
            algebra: algebra.clone(),
            basis,
        })
    }

    /// Builds a lattice whose basis elements are given by coordinate rows in
    /// the algebra basis `1, x, y, xy`.
    pub fn from_coord_rows(
        algebra: &QuaternionAlgebra,
        rows: &[[Rational; 4]; 4],
    ) -> Result<Self, OrderError> {
        let basis: Vec<Quaternion> = rows
            .iter()
            .map(|r| algebra.element(r[0].clone(), r[1].clone(), r[2].clone(), r[3].clone()))
            .collect();
        Self::new(
            algebra,
            basis.try_into().expect("exactly four basis elements"),
        )
    }

    /// The standard lattice `Z + Zx + Zy + Zxy`.
    pub fn standard(algebra: &QuaternionAlgebra) -> Self {
        QuatOrder {
            algebra: algebra.clone(),
            basis: algebra.basis(),
        }
    }

    /// The ambient algebra.
    pub fn algebra(&self) -> &QuaternionAlgebra {
        &self.algebra
    }

    /// The basis elements.
    pub fn basis(&self) -> &[Quaternion; 4] {
        &self.basis
    }

    /// Coordinates of `q` in this lattice's basis.
    pub fn coords_of(&self, q: &Quaternion) -> Result<[Rational; 4], OrderError> {
        Ok(coords_in_basis(&self.basis, q)?)
    }

    /// True when `q` lies in the lattice (integral coordinates).
    pub fn contains(&self, q: &Quaternion) -> Result<bool, OrderError> {
        Ok(self.coords_of(q)?.iter().all(is_integer))
    }

    /// The element with the given integral coordinates in this basis.
    pub fn element_from_coords(&self, coords: &[i64; 4]) -> Quaternion {
        let mut acc = self.algebra.zero();
        for (c, e) in coords.iter().zip(&self.basis) {
            acc = acc + e.scaled(&rat(*c));
        }
        acc
    }

    /// Gram matrix `(trd(e_i e_j))_(i,j)` of the reduced-trace pairing.
    pub fn trace_gram(&self) -> Matrix<Rational> {
        Matrix::from_fn(4, 4, |i, j| {
            (self.basis[i].clone() * self.basis[j].clone()).reduced_trace()
        })
    }
}

/// Checks that the lattice is an order: it must span the algebra, contain 1,
/// consist of integral elements, and be closed under multiplication.  Returns
/// the first violation found, with its witness.
pub fn verify_order(order: &QuatOrder) -> Result<(), OrderViolation> {
    let one_coords = match coords_in_basis(order.basis(), &order.algebra().one()) {
        Ok(c) => c,
        Err(_) => return Err(OrderViolation::DegenerateBasis),
    };
    if !one_coords.iter().all(is_integer) {
        return Err(OrderViolation::MissingUnit);
    }
    for e in order.basis() {
        if !is_integer(&e.reduced_trace()) {
            return Err(OrderViolation::TraceNotIntegral {
                element: e.to_string(),
                trace: exact_core::format_rational(&e.reduced_trace()),
            });
        }
        if !is_integer(&e.reduced_norm()) {
            return Err(OrderViolation::NormNotIntegral {
                element: e.to_string(),
                norm: exact_core::format_rational(&e.reduced_norm()),
            });
        }
    }
    for i in 0..4 {
        for j in 0..4 {
            let product = order.basis()[i].clone() * order.basis()[j].clone();
            let coords = coords_in_basis(order.basis(), &product)
                .expect("basis verified nondegenerate above");
            if !coords.iter().all(is_integer) {
                return Err(OrderViolation::ProductEscapes {
                    i,
                    j,
                    product: product.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Reduced discriminant of the lattice: the positive integer `d` with
/// `d^2 = |det(trd(e_i e_j))|`.
///
/// For an order the trace Gram determinant is a perfect square; if it is not
/// (or not a nonzero integer), the lattice was no order and the error says so.
pub fn reduced_discriminant(order: &QuatOrder) -> Result<BigInt, OrderError> {
    let det = order.trace_gram().det();
    if det.is_zero() {
        return Err(OrderError::DegenerateBasis);
    }
    if !is_integer(&det) {
        return Err(OrderError::InconsistentDiscriminant(format!(
            "trace Gram determinant {} is not an integer; the lattice is not an order",
            exact_core::format_rational(&det)
        )));
    }
    let abs = det.numer().abs();
    let root = abs.sqrt();
    if &root * &root != abs {
        return Err(OrderError::InconsistentDiscriminant(format!(
            "|trace Gram determinant| = {abs} is not a perfect square; the lattice is not an order"
        )));
    }
    Ok(root)
}

/// Whether the order is maximal: its reduced discriminant equals the algebra
/// discriminant (the product of the finite ramified primes).
///
/// The reduced discriminant of an order is always the algebra discriminant
/// times the index of the order in a maximal one; a value that is not a
/// multiple of the algebra discriminant is reported as an inconsistency.
pub fn is_maximal(order: &QuatOrder) -> Result<bool, OrderError> {
    let discrd = reduced_discriminant(order)?;
    let class = classify_algebra(order.algebra().a(), order.algebra().b())?;
    let (quotient, remainder) = discrd.div_rem(&class.discriminant);
    if !remainder.is_zero() {
        return Err(OrderError::InconsistentDiscriminant(format!(
            "reduced discriminant {discrd} is not a multiple of the algebra discriminant {}",
            class.discriminant
        )));
    }
    let _index = quotient; // the index [maximal : order] is quotient here
    Ok(discrd == class.discriminant)
}

/// Enumerates the norm-one elements of the order whose coordinates in the
/// order basis are bounded by `height` in absolute value, in lexicographic
/// coordinate sequence.
pub fn norm_one_search(order: &QuatOrder, height: u32) -> Vec<Quaternion> {
    let h = height as i64;
    let mut found = Vec::new();
    for c0 in -h..=h {
        for c1 in -h..=h {
            for c2 in -h..=h {
                for c3 in -h..=h {
                    let q = order.element_from_coords(&[c0, c1, c2, c3]);
                    if q.reduced_norm() == rat(1) {
                        found.push(q);
                    }
                }
            }
        }
    }
    found
}

/// Tests the congruence condition `gamma = 1 (mod level * O)`: whether
/// `(gamma - 1) / level` lies in the order.
pub fn congruence_membership(
    order: &QuatOrder,
    gamma: &Quaternion,
    level: &BigInt,
) -> Result<bool, OrderError> {
    if !level.is_positive() {
        return Err(OrderError::BadLevel(level.to_string()));
    }
    let level_inv = Rational::new(BigInt::one(), level.clone());
    let shifted = (gamma.clone() - gamma.algebra().one()).scaled(&level_inv);
    order.contains(&shifted)
}
