use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u32),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("budget exceeded: {needed} items requested, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("subspace is not closed under the bracket")]
    NotClosed,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
    #[error("grading violated: [{0}, {1}] leaves degree {2}")]
    GradingViolation(usize, usize, i64),
    #[error("action is not a Lie homomorphism on basis pair ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error(
        "operator is not diagonalizable over the prime field (eigenspaces span {found} of {dim})"
    )]
    NotDiagonalizable { found: usize, dim: usize },
    #[error(
        "difference of brackets has a component of non-positive weight {weight} on pair ({i}, {j})"
    )]
    NotFilteredDeformation { i: usize, j: usize, weight: i64 },
    #[error("no Cartan subalgebra found after {0} attempts")]
    CartanRetriesExhausted(usize),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("malformed algebra file: {0}")]
    Format(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
