//! Experiment driver: algebra specs, file formats, decomposition search, and
//! the report-producing commands behind the `nilsum` binary.

pub mod commands;
pub mod file;
pub mod report;
pub mod search;
pub mod spec;
pub mod suites;

pub use commands::{
    cmd_check, cmd_remarks, cmd_search, cmd_serialize, heisenberg_remark, triangular_remark,
    two_dim_remark, Predicate, RemarksParams,
};
pub use file::{load_algebra, save_algebra, AlgebraFile, ALGEBRA_SCHEMA_VERSION};
pub use report::{Report, REPORT_SCHEMA_VERSION};
pub use search::{
    fast_path, search_decomposition, verify_decomposition, SearchBudget, SearchMode, SearchResult,
    SearchStats, SearchStatus, Witness,
};
pub use spec::{AlgebraSpec, BuiltAlgebra, DerivationTerm, SpecValue};
pub use suites::{cmd_suite, Suite, SuiteParams};
