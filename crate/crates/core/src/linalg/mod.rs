//! Dense exact linear algebra over the rationals.
//!
//! Everything downstream (Hom spaces, Ext groups, the Auslander-Reiten
//! translate) reduces to ranks, kernels and cokernels of matrices built
//! here, so no floating point is used anywhere.

mod matrix;
mod scalar;

pub use matrix::{Echelon, Matrix, Solution};
pub use scalar::Rational;

/// Rank of `m` over the rationals.
pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Columns spanning the null space of `m`.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    m.kernel_basis()
}

/// Solves `m * x = b` exactly.
pub fn solve(m: &Matrix, b: &[Rational]) -> Solution {
    m.solve(b)
}

/// Projection onto the cokernel of `m`.
pub fn cokernel_projection(m: &Matrix) -> Matrix {
    m.cokernel_projection()
}
