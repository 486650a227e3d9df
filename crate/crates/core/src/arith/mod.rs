//! Exact number types and integer-matrix algorithms.

pub mod cyclotomic;
pub mod lattice;
pub mod matrix;

pub use cyclotomic::{cyclotomic_mul, cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use lattice::{
    hermite_normal_form, integer_kernel, intersect_lattices, lattice_quotient, reduce_modulo,
    smith_normal_form, solve_integer, LatticeQuotient, SmithDecomposition,
};
pub use matrix::{row_reduce_upper, solve_left, to_rational, triangular_inverse, IntMatrix, RatMatrix};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not lower triangular")]
    NotLowerTriangular,
    #[error("diagonal entry {index} is not positive")]
    BadDiagonal { index: usize },
    #[error("row {row} needs multiplier {numerator}/{denominator} against pivot row {pivot_row}")]
    NonIntegralMultiplier {
        row: usize,
        pivot_row: usize,
        numerator: String,
        denominator: String,
    },
    #[error("zero pivot at row {row} but row {blocking_row} is nonzero in that column")]
    ZeroPivot { row: usize, blocking_row: usize },
}
