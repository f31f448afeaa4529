//! Quantum exterior algebra, sigma-power chain complexes at a root of
//! unity, Euler characteristics plain and q-weighted, and exact homology
//! ranks over cyclotomic fields.

mod algebra;
mod complex;
mod matrix;
mod qchi;

pub use algebra::{basis, check_nilpotent, graded_qdim, sigma_matrix, AlgebraSpec, GradedPiece};
pub use complex::{
    build_complex, check_d_squared, euler_char, homology_ranks, ChainComplex,
    DEFAULT_MATRIX_BUDGET,
};
pub use matrix::SparseMat;
pub use qchi::{
    modified_euler_char, q_fibonacci, trivial_exponent_fn, ExponentFn, QFibVariant,
};
