use thiserror::Error;

/// Errors shared by the solver library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Exact integer arithmetic left the widest supported width.
    #[error("capacity: exact arithmetic overflow in {context}")]
    Overflow { context: &'static str },

    /// A table or enumeration would exceed its configured entry cap.
    #[error("capacity: {what} needs {required} entries, cap is {cap}")]
    Capacity {
        what: &'static str,
        required: u128,
        cap: u128,
    },

    /// Requested subset cardinality exceeds the set size.
    #[error("infeasible cardinality: m={m} exceeds n={n}")]
    CardinalityTooLarge { m: usize, n: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
