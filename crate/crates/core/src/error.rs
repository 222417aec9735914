use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("node set is empty")]
    EmptyNodes,

    #[error("duplicate node {value} at positions {first} and {second}")]
    DuplicateNode {
        value: String,
        first: usize,
        second: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for {len} nodes")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("ambient dimension must be at least 1")]
    ZeroDimension,

    #[error("{p} equations exceed {n} unknowns; use solve_overdetermined")]
    Overdetermined { p: usize, n: usize },

    #[error("{p} equations do not exceed {n} unknowns; use solve_general")]
    NotOverdetermined { p: usize, n: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}
