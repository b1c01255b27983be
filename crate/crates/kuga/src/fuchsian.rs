//! Norm-one quaternions together with their 2x2 matrix realizations, acting
//! on the upper half plane by fractional linear maps.

use std::fmt;
use std::ops::Mul;

use exact_core::{rat, ComplexExactScalar, Matrix, QuadScalar};
use quaternion::{MatrixEmbedding, Quaternion};

use crate::error::KugaError;

/// Demands that `tau` lie strictly above the real axis.
pub fn require_upper_half(tau: &ComplexExactScalar) -> Result<(), KugaError> {
    if tau.im().sign() > 0 {
        Ok(())
    } else {
        Err(KugaError::TauNotInUpperHalfPlane(tau.to_string()))
    }
}

/// Multiplies a real quadratic scalar into a complex one, failing gracefully
/// when the two values live in different quadratic fields.
pub fn real_times_complex(
    s: &QuadScalar,
    z: &ComplexExactScalar,
) -> Result<ComplexExactScalar, KugaError> {
    s.try_unify(z.re())
        .map_err(|e| KugaError::MixedFields(e.to_string()))?;
    Ok(ComplexExactScalar::new(
        s.clone() * z.re().clone(),
        s.clone() * z.im().clone(),
    ))
}

/// Applies a real matrix to a complex vector.
pub fn apply_real_matrix(
    m: &Matrix<QuadScalar>,
    v: &[ComplexExactScalar],
) -> Result<Vec<ComplexExactScalar>, KugaError> {
    if m.col_count() != v.len() {
        return Err(KugaError::ShapeMismatch(format!(
            "matrix is {}x{} but vector has length {}",
            m.row_count(),
            m.col_count(),
            v.len()
        )));
    }
    let mut out = Vec::with_capacity(m.row_count());
    for i in 0..m.row_count() {
        let mut acc = ComplexExactScalar::from_rationals(rat(0), rat(0));
        for j in 0..v.len() {
            acc = acc + real_times_complex(&m[(i, j)], &v[j])?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Lifts a real matrix entrywise into complex scalars.
pub fn complexify(m: &Matrix<QuadScalar>) -> Matrix<ComplexExactScalar> {
    m.map(|s| ComplexExactScalar::real(s.clone()))
}

/// A norm-one quaternion together with its determinant-one matrix image.
#[derive(Debug, Clone)]
pub struct FuchsianElement {
    embedding: MatrixEmbedding,
    quaternion: Quaternion,
    matrix: Matrix<QuadScalar>,
}

impl FuchsianElement {
    /// Wraps a norm-one quaternion; rejects any other reduced norm.
    pub fn new(embedding: &MatrixEmbedding, q: Quaternion) -> Result<Self, KugaError> {
        let norm = q.reduced_norm();
        if norm != rat(1) {
            return Err(KugaError::NotNormOne(exact_core::format_rational(&norm)));
        }
        let matrix = embedding.image(&q);
        Ok(FuchsianElement {
            embedding: embedding.clone(),
            quaternion: q,
            matrix,
        })
    }

    /// The identity element.
    pub fn identity(embedding: &MatrixEmbedding) -> Self {
        let one = embedding.algebra().one();
        FuchsianElement::new(embedding, one).expect("1 has norm 1")
    }

    /// The underlying quaternion.
    pub fn quaternion(&self) -> &Quaternion {
        &self.quaternion
    }

    /// The 2x2 matrix realization (determinant exactly 1).
    pub fn matrix(&self) -> &Matrix<QuadScalar> {
        &self.matrix
    }

    /// The embedding this element was realized through.
    pub fn embedding(&self) -> &MatrixEmbedding {
        &self.embedding
    }

    /// The inverse element; for norm one this is the conjugate quaternion.
    pub fn inverse(&self) -> Self {
        FuchsianElement::new(&self.embedding, self.quaternion.conjugate())
            .expect("conjugate of a norm-one element has norm 1")
    }

    /// True when this is the identity.
    pub fn is_identity(&self) -> bool {
        self.quaternion == self.embedding.algebra().one()
    }

    /// The fractional linear action on the upper half plane.
    pub fn apply(&self, tau: &ComplexExactScalar) -> Result<ComplexExactScalar, KugaError> {
        require_upper_half(tau)?;
        let a = &self.matrix[(0, 0)];
        let b = &self.matrix[(0, 1)];
        let c = &self.matrix[(1, 0)];
        let d = &self.matrix[(1, 1)];
        let numerator = real_times_complex(a, tau)? + ComplexExactScalar::real(b.clone());
        let denominator = real_times_complex(c, tau)? + ComplexExactScalar::real(d.clone());
        let inv = denominator
            .inv()
            .ok_or_else(|| KugaError::TauNotInUpperHalfPlane(tau.to_string()))?;
        Ok(numerator * inv)
    }

    /// The denominator `c*tau + d` of the fractional linear action.
    pub fn automorphy_factor(
        &self,
        tau: &ComplexExactScalar,
    ) -> Result<ComplexExactScalar, KugaError> {
        let c = &self.matrix[(1, 0)];
        let d = &self.matrix[(1, 1)];
        Ok(real_times_complex(c, tau)? + ComplexExactScalar::real(d.clone()))
    }

    /// Evaluates a reduced word over `gens`; letters are (index, inverted).
    pub fn from_word(
        embedding: &MatrixEmbedding,
        gens: &[FuchsianElement],
        word: &[(usize, bool)],
    ) -> Self {
        let mut acc = FuchsianElement::identity(embedding);
        for &(index, inverted) in word {
            let factor = if inverted {
                gens[index].inverse()
            } else {
                gens[index].clone()
            };
            acc = acc * factor;
        }
        acc
    }
}

impl PartialEq for FuchsianElement {
    fn eq(&self, other: &Self) -> bool {
        self.quaternion == other.quaternion
    }
}

impl Mul for FuchsianElement {
    type Output = FuchsianElement;
    fn mul(self, rhs: FuchsianElement) -> FuchsianElement {
        FuchsianElement::new(&self.embedding, self.quaternion * rhs.quaternion)
            .expect("norm is multiplicative, so the product has norm 1")
    }
}

impl fmt::Display for FuchsianElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.quaternion)
    }
}
