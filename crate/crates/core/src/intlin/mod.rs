//! Exact integer linear algebra: matrices, Smith normal form, integer
//! solutions and kernels.

mod hermite;
mod json;
mod matrix;
mod scalar;
mod snf;

pub use hermite::{hermite_basis, HermiteBasis};
use hermite::LatticeSolver;
pub use json::{MatrixWire, WireInt};
pub use matrix::{int_vec, IntMatrix};
pub use snf::{smith_normal_form, SmithForm};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use snf::{smith_tracked, Track};

/// An integer solution of `a * x = b`, if one exists.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != a.rows() {
        return Err(Error::Shape(format!("solve: {} rows but right-hand side of length {}", a.rows(), b.len())));
    }
    Ok(LatticeSolver::new(a).solve(b))
}

/// Solves `a * x = b` for every column `b` of `rhs` with one factorization.
pub fn solve_many(a: &IntMatrix, rhs: &IntMatrix) -> Result<Option<IntMatrix>> {
    if rhs.rows() != a.rows() {
        return Err(Error::Shape(format!("solve: {} rows but right-hand side with {}", a.rows(), rhs.rows())));
    }
    if rhs.cols() == 0 {
        return Ok(Some(IntMatrix::zeros(a.cols(), 0)));
    }
    let solver = LatticeSolver::new(a);
    let mut cols = Vec::with_capacity(rhs.cols());
    for b in rhs.columns() {
        match solver.solve(&b) {
            Some(x) => cols.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(IntMatrix::from_columns(a.cols(), &cols)))
}

/// Columns form a basis of `{x : a x = 0}`. The basis is primitive: it
/// extends to a basis of `Z^cols` (it is a block of a unimodular matrix).
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    hermite::hermite_kernel(a)
}

/// Columns form a basis of the column span of `a`, in Hermite form.
pub fn image_basis(a: &IntMatrix) -> IntMatrix {
    hermite_basis(a).basis
}

/// Rank over the rationals.
pub fn rank(a: &IntMatrix) -> usize {
    smith_tracked(a, Track { left: false, left_inv: false, right: false }).rank
}

#[cfg(test)]
mod tests;
