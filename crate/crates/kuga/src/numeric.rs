//! Interval-matrix helpers backing the certified numeric fallback: every
//! operation returns enclosures, so a sign decided here is a proof and an
//! undecided sign is reported as such.

use exact_core::{Matrix, QuadScalar, RatInterval, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// A dense matrix of rational intervals.
#[derive(Debug, Clone)]
pub struct IntervalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<RatInterval>,
}

impl IntervalMatrix {
    /// Encloses each entry of a quadratic-scalar matrix to `bits` bits.
    pub fn enclose(m: &Matrix<QuadScalar>, bits: u32) -> Self {
        IntervalMatrix {
            rows: m.row_count(),
            cols: m.col_count(),
            data: m.entries().map(|s| s.enclosure(bits)).collect(),
        }
    }

    /// Builds a matrix from row-major entries.
    pub fn from_entries(rows: usize, cols: usize, data: Vec<RatInterval>) -> Self {
        assert_eq!(rows * cols, data.len(), "entry count must match the shape");
        IntervalMatrix { rows, cols, data }
    }

    /// Row count.
    pub fn row_count(&self) -> usize {
        self.rows
    }

    /// Column count.
    pub fn col_count(&self) -> usize {
        self.cols
    }

    /// The entry at (i, j).
    pub fn at(&self, i: usize, j: usize) -> &RatInterval {
        &self.data[i * self.cols + j]
    }

    /// The transpose.
    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.at(i, j).clone());
            }
        }
        IntervalMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// The matrix product; panics on shape mismatch like the exact matrices.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "interval matrix shape mismatch");
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = RatInterval::point(Rational::zero());
                for k in 0..self.cols {
                    acc = acc + self.at(i, k).clone() * rhs.at(k, j).clone();
                }
                data.push(acc);
            }
        }
        IntervalMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }

    /// The entrywise difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntervalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    /// The trace enclosure.
    pub fn trace(&self) -> RatInterval {
        assert_eq!(self.rows, self.cols, "trace of non-square interval matrix");
        (0..self.rows).fold(RatInterval::point(Rational::zero()), |acc, i| {
            acc + self.at(i, i).clone()
        })
    }

    /// Enclosure of the determinant of the leading k-by-k block, by Laplace
    /// expansion (the blocks here stay small).
    pub fn leading_minor(&self, k: usize) -> RatInterval {
        assert!(k >= 1 && k <= self.rows.min(self.cols));
        let block: Vec<Vec<RatInterval>> = (0..k)
            .map(|i| (0..k).map(|j| self.at(i, j).clone()).collect())
            .collect();
        laplace_det(&block)
    }

    /// The widest entry width.
    pub fn max_width(&self) -> Rational {
        self.data
            .iter()
            .map(RatInterval::width)
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

fn laplace_det(block: &[Vec<RatInterval>]) -> RatInterval {
    let n = block.len();
    if n == 1 {
        return block[0][0].clone();
    }
    let mut acc = RatInterval::point(Rational::zero());
    for (j, pivot) in block[0].iter().enumerate() {
        let minor: Vec<Vec<RatInterval>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| block[i][c].clone())
                    .collect()
            })
            .collect();
        let term = pivot.clone() * laplace_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// The largest `k >= 0` with `r <= 2^-k`, or `None` when `r` is zero (an
/// exact enclosure) or at least 1.
pub fn dyadic_exponent(r: &Rational) -> Option<u32> {
    if r.is_zero() || r.is_negative() {
        return None;
    }
    let mut k = 0u32;
    let mut scaled = r.clone();
    let two = Rational::from_integer(BigInt::from(2));
    if scaled > Rational::from_integer(BigInt::from(1)) {
        return None;
    }
    while &scaled * &two <= Rational::from_integer(BigInt::from(1)) && k < 4096 {
        scaled = &scaled * &two;
        k += 1;
    }
    Some(k)
}

/// A short human-readable magnitude for a witness string: exact zero, a
/// dyadic bound, or a floating approximation for large values.
pub fn width_label(r: &Rational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    match dyadic_exponent(r) {
        Some(k) => format!("<= 2^-{k}"),
        None => format!("~{:.3e}", r.to_f64().unwrap_or(f64::INFINITY)),
    }
}
