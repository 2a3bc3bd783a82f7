use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("matrix is not idempotent: entry ({row},{col}) of M^2-M is {value}")]
    NotIdempotent { row: usize, col: usize, value: String },
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("degree {degree} exceeds the configured cap {cap}")]
    CapExceeded { degree: usize, cap: usize },
    #[error("dimension {dim} exceeds the memory guard {limit}")]
    TooLarge { dim: usize, limit: usize },
    #[error("context too shallow: {0}")]
    ContextTooShallow(String),
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("Jacobi identity fails on ({0}, {1}, {2})")]
    Jacobi(String, String, String),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("context has no coalgebra tables")]
    MissingCoalgebra,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("entries do not commute: {left} and {right}")]
    NonCommutingEntries { left: String, right: String },
    #[error("tensor product does not exist: component {witness} is nonzero")]
    NonExistence { witness: String },
    #[error("inverse check failed at ({row},{col})")]
    InverseFailure { row: usize, col: usize },
    #[error("corepresentation check failed: {0}")]
    CorepCheck(String),
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("document error at {path}: {msg}")]
    Document { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
