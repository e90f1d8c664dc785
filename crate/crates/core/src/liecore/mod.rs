//! Structure-constant Lie algebras and their series and predicates.

mod algebra;
mod series;
mod structure;

pub use algebra::{LieAlgebra, SparseVec, StructureReport};
pub use series::SeriesReport;
pub use structure::CARTAN_RETRIES;
