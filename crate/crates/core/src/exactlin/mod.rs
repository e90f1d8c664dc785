//! Exact linear algebra over prime fields.

mod enumerate;
mod field;
mod matrix;
mod subspace;

pub use enumerate::{
    enumerate_subspaces, enumeration_patterns, enumeration_size, gaussian_binomial,
    par_filter_subspaces, pattern_size, pivot_patterns, subspace_count, PatternIter,
};
pub use field::{is_zero, unit_vector, FieldElement, Fp, MAX_PRIME};
pub use matrix::{sparse_kernel, Matrix, Rref};
pub use subspace::Subspace;
