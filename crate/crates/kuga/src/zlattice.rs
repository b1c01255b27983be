//! Integer lattices inside a rational vector space, with exact membership
//! and coordinate solves against a fixed generator list.

use exact_core::{denominator_lcm, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::KugaError;

/// The integral row span of a list of rational vectors, held in integer
/// echelon form after clearing denominators.
#[derive(Debug, Clone)]
pub struct ZLattice {
    dim: usize,
    scale: BigInt,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl ZLattice {
    /// Builds the lattice spanned by the given vectors over the integers.
    pub fn from_rational_rows(generators: &[Vec<Rational>]) -> Result<Self, KugaError> {
        let dim = generators.first().map_or(0, |row| row.len());
        if generators.iter().any(|row| row.len() != dim) {
            return Err(KugaError::ShapeMismatch(
                "lattice generators have differing lengths".to_string(),
            ));
        }
        let flat: Vec<&Rational> = generators.iter().flatten().collect();
        let scale = denominator_lcm(flat.iter().copied());
        let mut rows: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|row| {
                row.iter()
                    .map(|entry| {
                        let scaled = entry * Rational::from(scale.clone());
                        debug_assert!(scaled.is_integer());
                        scaled.to_integer()
                    })
                    .collect()
            })
            .collect();

        // Integer row echelon by repeated gcd descent in each column.
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..dim {
            loop {
                let mut best: Option<usize> = None;
                for (i, row) in rows.iter().enumerate().skip(rank) {
                    if row[col].is_zero() {
                        continue;
                    }
                    if best.map_or(true, |b| row[col].abs() < rows[b][col].abs()) {
                        best = Some(i);
                    }
                }
                let Some(best) = best else { break };
                rows.swap(rank, best);
                let mut dirty = false;
                let pivot = rows[rank][col].clone();
                for i in rank + 1..rows.len() {
                    if rows[i][col].is_zero() {
                        continue;
                    }
                    let q = rows[i][col].div_floor(&pivot);
                    for j in col..dim {
                        let delta = &q * &rows[rank][j];
                        rows[i][j] -= delta;
                    }
                    dirty |= !rows[i][col].is_zero();
                }
                if !dirty {
                    if rows[rank][col].is_negative() {
                        for entry in rows[rank].iter_mut() {
                            *entry = -std::mem::take(entry);
                        }
                    }
                    pivots.push(col);
                    rank += 1;
                    break;
                }
            }
        }
        rows.truncate(rank);
        Ok(ZLattice {
            dim,
            scale,
            rows,
            pivots,
        })
    }

    /// The ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The rank of the lattice.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Exact membership of a rational vector in the integral span.
    pub fn contains(&self, v: &[Rational]) -> Result<bool, KugaError> {
        if v.len() != self.dim {
            return Err(KugaError::ShapeMismatch(format!(
                "vector length {} does not match lattice dimension {}",
                v.len(),
                self.dim
            )));
        }
        let mut work = Vec::with_capacity(self.dim);
        for entry in v {
            let scaled = entry * Rational::from(self.scale.clone());
            if !scaled.is_integer() {
                return Ok(false);
            }
            work.push(scaled.to_integer());
        }
        for (row, &pivot_col) in self.rows.iter().zip(&self.pivots) {
            if work[pivot_col].is_zero() {
                continue;
            }
            let (q, r) = work[pivot_col].div_rem(&row[pivot_col]);
            if !r.is_zero() {
                return Ok(false);
            }
            for j in pivot_col..self.dim {
                let delta = &q * &row[j];
                work[j] -= delta;
            }
        }
        Ok(work.iter().all(Zero::is_zero))
    }
}

/// Solves `v = sum c_k * gens[k]` exactly; returns the coefficients when a
/// unique integral solution exists, `None` when the solution is fractional
/// or no solution exists.
///
/// The generators must be linearly independent over the rationals.
pub fn integral_coordinates(
    gens: &[Vec<Rational>],
    v: &[Rational],
) -> Result<Option<Vec<BigInt>>, KugaError> {
    let k = gens.len();
    let dim = v.len();
    if gens.iter().any(|row| row.len() != dim) {
        return Err(KugaError::ShapeMismatch(
            "generator length does not match target length".to_string(),
        ));
    }
    if k > dim {
        return Err(KugaError::ShapeMismatch(format!(
            "{k} generators cannot be independent in dimension {dim}"
        )));
    }
    // Augmented system: columns are the generators, last column the target.
    let mut aug: Vec<Vec<Rational>> = (0..dim)
        .map(|row| {
            let mut r: Vec<Rational> = gens.iter().map(|g| g[row].clone()).collect();
            r.push(v[row].clone());
            r
        })
        .collect();

    let mut pivot_rows = Vec::with_capacity(k);
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..dim).find(|&r| !aug[r][col].is_zero()) else {
            return Err(KugaError::ShapeMismatch(
                "lattice generators are linearly dependent".to_string(),
            ));
        };
        aug.swap(row, p);
        let pivot = aug[row][col].clone();
        for entry in aug[row].iter_mut() {
            *entry = entry.clone() / pivot.clone();
        }
        for r in 0..dim {
            if r != row && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in col..=k {
                    let delta = &factor * &aug[row][c];
                    aug[r][c] -= delta;
                }
            }
        }
        pivot_rows.push(row);
        row += 1;
    }
    // Rows beyond the pivots must have vanished for the system to be
    // consistent.
    for r in aug.iter().skip(k) {
        if !r[k].is_zero() {
            return Ok(None);
        }
    }
    let mut coords = Vec::with_capacity(k);
    for (col, &r) in pivot_rows.iter().enumerate() {
        debug_assert!(aug[r][col].is_one());
        let solution = aug[r][k].clone();
        if !solution.is_integer() {
            return Ok(None);
        }
        coords.push(solution.to_integer());
    }
    Ok(Some(coords))
}
