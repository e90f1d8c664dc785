//! Named constructions: truncated polynomials, Witt and Zassenhaus algebras,
//! classical algebras, current algebras, graded sums and semidirect sums.

pub mod classical;
pub mod graded;
pub mod poly;
pub mod semidirect;
pub mod tensor;
pub mod witt;

pub use graded::GradedAlgebra;
pub use poly::{Derivation, TruncatedPoly, TruncatedPolyAlgebra};
pub use semidirect::{module_example, semidirect, ModuleExample};
pub use tensor::{tensor_with_om, GradedSum};
pub use witt::{zassenhaus, zassenhaus_matches_witt, InvariantIdealReport, WittAlgebra};
