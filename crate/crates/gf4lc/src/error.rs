//! Error types shared across the crate.

use thiserror::Error;

/// Unified error type for all fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector length {0} out of range (1..={max})", max = crate::MAX_N)]
    LengthOutOfRange(usize),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("symplectic form needs an even number of bits, got {0}")]
    OddSymplecticLength(usize),
    #[error("generator span has GF(2) dimension {found}, expected {expected}")]
    RankDeficient { expected: usize, found: usize },
    #[error("generators {i} and {j} have Hermitian trace inner product 1")]
    NotSelfOrthogonal { i: usize, j: usize },
    #[error("matrix does not generate a self-dual code: {0}")]
    NotSelfDual(Box<Error>),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("Type II distance bound is undefined for odd length {0}")]
    TypeIiOddLength(usize),
    #[error("graph parse error: {0}")]
    GraphParse(String),
    #[error("matrix parse error: {0}")]
    MatrixParse(String),
    #[error("orbit budget of {budget} canonical forms exceeded")]
    OrbitBudgetExceeded { budget: usize },
    #[error("class-size search budget of {budget} codes exceeded")]
    ClassBudgetExceeded { budget: usize },
    #[error("automorphism size n!*S/l is not an integer (n! * {s} * {n}! vs l = {l}); this signals an orbit-enumeration or scaling-count bug")]
    NonIntegerAutSize { n: usize, s: u64, l: u128 },
    #[error("orbit sizes sum to {got} but there are {expected} connected graphs on {n} vertices")]
    CoverageMismatch { n: usize, got: u64, expected: u64 },
    #[error("catalog format error at line {line}: {msg}")]
    CatalogFormat { line: usize, msg: String },
    #[error("catalog version mismatch: found {found}, expected {expected}")]
    CatalogVersion { found: String, expected: String },
    #[error("missing catalog for n = {0}")]
    MissingCatalog(usize),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
