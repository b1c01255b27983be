//! Dense matrices over exact field scalars, with exact Gaussian elimination.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::complex::ComplexExactScalar;
use crate::error::ExactError;
use crate::quad::QuadScalar;
use crate::rational::Rational;

/// An exact field scalar a [`Matrix`] can be built over.
///
/// The `Zero`/`One`/arithmetic bounds give ring operations; `inv` supplies
/// exact division, which Gaussian elimination needs.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self) -> Option<Self>;
}

impl Scalar for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for QuadScalar {
    fn inv(&self) -> Option<Self> {
        QuadScalar::inv(self)
    }
}

impl Scalar for ComplexExactScalar {
    fn inv(&self) -> Option<Self> {
        ComplexExactScalar::inv(self)
    }
}

/// A dense `rows x cols` matrix over an exact scalar type, stored row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    /// Builds a matrix from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ExactError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(ExactError::DimensionMismatch(
                "matrix must have at least one row and one column".into(),
            ));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(ExactError::DimensionMismatch(format!(
                "ragged rows: expected {ncols} columns, found {}",
                bad.len()
            )));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a `rows x cols` matrix by evaluating `f(i, j)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// The `n x n` identity.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// The `rows x cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    /// Number of rows.
    pub fn row_count(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn col_count(&self) -> usize {
        self.cols
    }

    /// True when the matrix is square.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Iterator over all entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    /// Transposed copy.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Applies `f` entrywise into a possibly different scalar type.
    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix::from_fn(self.rows, self.cols, |i, j| f(&self[(i, j)]))
    }

    /// Entrywise scaling by `factor`.
    pub fn scaled(&self, factor: &T) -> Self {
        self.map(|x| x.clone() * factor.clone())
    }

    /// Sum of diagonal entries; panics on non-square input.
    pub fn trace(&self) -> T {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// True when `self == self^T`.
    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// True when `self == -self^T` with zero diagonal.
    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_zero()
                    && (0..i).all(|j| self[(i, j)] == -self[(j, i)].clone())
            })
    }

    /// Determinant of the upper-left `k x k` block; panics unless
    /// `1 <= k <= min(rows, cols)`.
    pub fn leading_principal_minor(&self, k: usize) -> T {
        assert!(k >= 1 && k <= self.rows.min(self.cols));
        Matrix::from_fn(k, k, |i, j| self[(i, j)].clone()).det()
    }

    /// Determinant by exact Gaussian elimination; panics on non-square input.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of non-square matrix");
        let mut work = self.clone();
        let n = work.rows;
        let mut det = T::one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !work[(r, col)].is_zero()) else {
                return T::zero();
            };
            if pivot_row != col {
                work.swap_rows(pivot_row, col);
                det = -det;
            }
            let pivot = work[(col, col)].clone();
            det = det * pivot.clone();
            let pivot_inv = pivot.inv().expect("nonzero pivot");
            for r in (col + 1)..n {
                let factor = work[(r, col)].clone() * pivot_inv.clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let delta = factor.clone() * work[(col, c)].clone();
                    work[(r, c)] = work[(r, c)].clone() - delta;
                }
            }
        }
        det
    }

    /// Exact inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        exact_linear_solve(self, &Self::identity(self.rows)).ok()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Solves `A * X = B` exactly for square `A`, by Gauss-Jordan elimination
/// with partial (first nonzero) pivoting.
///
/// `B` may have any number of columns.  Fails with
/// [`ExactError::DimensionMismatch`] on shape problems and
/// [`ExactError::Singular`] (carrying the achieved rank) when `A` is not
/// invertible.
pub fn exact_linear_solve<T: Scalar>(
    a: &Matrix<T>,
    b: &Matrix<T>,
) -> Result<Matrix<T>, ExactError> {
    if !a.is_square() {
        return Err(ExactError::DimensionMismatch(format!(
            "coefficient matrix is {}x{}, expected square",
            a.rows, a.cols
        )));
    }
    if b.rows != a.rows {
        return Err(ExactError::DimensionMismatch(format!(
            "right-hand side has {} rows, expected {}",
            b.rows, a.rows
        )));
    }
    let n = a.rows;
    let mut lhs = a.clone();
    let mut rhs = b.clone();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !lhs[(r, col)].is_zero()) else {
            return Err(ExactError::Singular { rank: col });
        };
        lhs.swap_rows(pivot_row, col);
        rhs.swap_rows(pivot_row, col);
        let pivot_inv = lhs[(col, col)].clone().inv().expect("nonzero pivot");
        for c in 0..n {
            lhs[(col, c)] = lhs[(col, c)].clone() * pivot_inv.clone();
        }
        for c in 0..rhs.cols {
            rhs[(col, c)] = rhs[(col, c)].clone() * pivot_inv.clone();
        }
        for r in 0..n {
            if r == col || lhs[(r, col)].is_zero() {
                continue;
            }
            let factor = lhs[(r, col)].clone();
            for c in 0..n {
                let delta = factor.clone() * lhs[(col, c)].clone();
                lhs[(r, c)] = lhs[(r, c)].clone() - delta;
            }
            for c in 0..rhs.cols {
                let delta = factor.clone() * rhs[(col, c)].clone();
                rhs[(r, c)] = rhs[(r, c)].clone() - delta;
            }
        }
    }
    Ok(rhs)
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "matrix addition shape mismatch"
        );
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + rhs[(i, j)].clone()
        })
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "matrix subtraction shape mismatch"
        );
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - rhs[(i, j)].clone()
        })
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert!(
            self.cols == rhs.rows,
            "matrix product shape mismatch: {}x{} times {}x{}",
            self.rows,
            self.cols,
            rhs.rows,
            rhs.cols
        );
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| {
                acc + self[(i, k)].clone() * rhs[(k, j)].clone()
            })
        })
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Column-aligned rows in brackets.
        let strings: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| strings.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        for (i, row) in strings.iter().enumerate() {
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{cell:>width$}", width = widths[j])?;
            }
            write!(f, "]")?;
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
