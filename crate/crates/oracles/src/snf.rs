use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Smith normal form invariant factors of an integer matrix.
///
/// Returns the nonzero invariant factors `d₁ | d₂ | …` (all positive) of the
/// matrix, computed by plain row/column reduction: repeatedly move a smallest
/// nonzero entry to the pivot position, use it to reduce its row and column,
/// and restart whenever a nonzero remainder (a strictly smaller entry)
/// appears. Divisibility between successive pivots is enforced by folding a
/// violating entry back into the pivot's row.
pub fn smith_normal_form(mat: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut m: Vec<Vec<BigInt>> = mat.to_vec();
    let dim = rows.min(cols);
    let mut k = 0;

    while k < dim {
        // Locate a nonzero entry of smallest absolute value in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if !m[i][j].is_zero() {
                    let better = match &pivot {
                        None => true,
                        Some((pi, pj)) => m[i][j].abs() < m[*pi][*pj].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }

        // Reduce column and row by the pivot; a nonzero remainder becomes the
        // new (smaller) pivot on the next pass.
        let mut clean = true;
        for i in k + 1..rows {
            if m[i][k].is_zero() {
                continue;
            }
            let q = &m[i][k] / &m[k][k];
            for j in k..cols {
                let sub = &q * &m[k][j];
                m[i][j] -= sub;
            }
            if !m[i][k].is_zero() {
                clean = false;
            }
        }
        for j in k + 1..cols {
            if m[k][j].is_zero() {
                continue;
            }
            let q = &m[k][j] / &m[k][k];
            for i in k..rows {
                let sub = &q * &m[i][k];
                m[i][j] -= sub;
            }
            if !m[k][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }

        // Enforce d_k | (every later entry): fold a violating row through the
        // pivot position and re-run this step.
        let mut violation = None;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if !(&m[i][j] % &m[k][k]).is_zero() {
                    violation = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = violation {
            for j in k..cols {
                let add = m[i][j].clone();
                m[k][j] += add;
            }
            continue;
        }

        k += 1;
    }

    let mut factors = Vec::new();
    for i in 0..k {
        factors.push(m[i][i].abs());
    }
    factors
}
