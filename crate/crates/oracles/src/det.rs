use num_rational::BigRational;
use num_traits::{One, Zero};

/// Determinant of a square rational matrix by Laplace cofactor expansion.
///
/// Exponential in the dimension — meant for the ≤ 6×6 matrices that show up
/// in trace-form and Gram-matrix cross-checks, where an implementation
/// independent of Gaussian elimination is wanted.
pub fn cofactor_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return BigRational::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = BigRational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigRational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rows(data: &[&[i64]]) -> Vec<Vec<BigRational>> {
        data.iter()
            .map(|r| r.iter().map(|&x| BigRational::from(BigInt::from(x))).collect())
            .collect()
    }

    #[test]
    fn two_by_two() {
        let m = rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(cofactor_det(&m), BigRational::from(BigInt::from(-2)));
    }

    #[test]
    fn four_by_four_diagonal() {
        let m = rows(&[&[2, 0, 0, 0], &[0, 4, 0, 0], &[0, 0, -6, 0], &[0, 0, 0, 12]]);
        assert_eq!(cofactor_det(&m), BigRational::from(BigInt::from(-576)));
    }

    #[test]
    fn singular_matrix() {
        let m = rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert!(cofactor_det(&m).is_zero());
    }
}
