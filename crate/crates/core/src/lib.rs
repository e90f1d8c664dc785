//! Exact computations with finite-dimensional Lie algebras over GF(p).
//!
//! The crate builds truncated polynomial algebras, Witt and Zassenhaus
//! algebras, graded sums `S ⊗ O_m + D`, filtrations and their associated
//! graded algebras, and graded deformation cochains. On top of that it
//! decides solvability and nilpotency, searches for decompositions of an
//! algebra as a vector-space sum of two nilpotent subalgebras, and runs
//! reproducible experiment suites that emit JSON reports.
//!
//! All arithmetic is exact; there are no tolerances anywhere.

pub mod construct;
pub mod deform;
pub mod driver;
pub mod error;
pub mod exactlin;
pub mod filtgrade;
pub mod liecore;

pub use error::{Error, Result};
pub use exactlin::{Fp, Matrix, Subspace};
pub use liecore::LieAlgebra;
