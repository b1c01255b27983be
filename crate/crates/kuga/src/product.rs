//! Fiber products: stacking several copies of a family over the same base
//! curve.  The base generators are unchanged; the representation, the
//! fiber lattice, and the polarizing matrix are repeated block-diagonally.

use exact_core::{Matrix, QuadScalar};

use crate::data::KugaData;
use crate::error::KugaError;

/// The block-diagonal matrix with `copies` copies of `block`.
fn repeat_diagonal(block: &Matrix<QuadScalar>, copies: usize) -> Matrix<QuadScalar> {
    let rows = block.row_count();
    let cols = block.col_count();
    Matrix::from_fn(rows * copies, cols * copies, |i, j| {
        let (bi, bj) = (i / rows, j / cols);
        if bi == bj {
            block[(i % rows, j % cols)].clone()
        } else {
            QuadScalar::integer(0)
        }
    })
}

/// The tall matrix with `block` in copy slot `slot` and zeros elsewhere.
fn place_in_slot(
    block: &Matrix<QuadScalar>,
    slot: usize,
    copies: usize,
) -> Matrix<QuadScalar> {
    let rows = block.row_count();
    Matrix::from_fn(rows * copies, block.col_count(), |i, j| {
        if i / rows == slot {
            block[(i % rows, j)].clone()
        } else {
            QuadScalar::integer(0)
        }
    })
}

/// Stacks `copies` copies of the family described by `data` over the same
/// base, with block-diagonal representation and polarization.
pub fn fiber_product_data(data: &KugaData, copies: usize) -> Result<KugaData, KugaError> {
    if copies == 0 {
        return Err(KugaError::ShapeMismatch(
            "a fiber product needs at least one copy".to_string(),
        ));
    }
    let gamma_gens = data.gamma_gens().to_vec();
    let rho_images = data
        .rho_images()
        .iter()
        .map(|rho| repeat_diagonal(rho, copies))
        .collect();
    let mut lattice = Vec::with_capacity(copies * data.lattice().len());
    for slot in 0..copies {
        for alpha in data.lattice() {
            lattice.push(place_in_slot(alpha, slot, copies));
        }
    }
    let s = repeat_diagonal(data.s(), copies);
    KugaData::new(data.g() * copies, gamma_gens, rho_images, lattice, s)
}
