//! Filtrations determined by a subalgebra, associated graded algebras, the
//! embedding `gr B → gr L`, and checkers for graded nilpotent subalgebras of
//! `S ⊗ O_m + D`.

mod census;
mod filtration;
mod graded;
mod nilpotent;

pub use census::{
    random_degree_raising, random_nilpotent_derivation, random_triangular, witt_census, CensusMode,
    CensusReport,
};
pub use filtration::{
    weisfeiler_filtration, Filtration, SubmoduleChoice, EXACT_SUBMODULE_SCAN_LIMIT,
};
pub use graded::{associated_graded, gr_embed, AssociatedGraded, GradedEmbedding};
pub use nilpotent::{
    check_graded_nilpotent, check_nilpotent_structure, dimension_audit, dimension_audit_dims,
    nonnilpotency_witness, DescentWitness, DimensionAudit, GradedNilpotentReport,
    NilpotentStructureReport, NonNilpotencyWitness,
};
