use thiserror::Error;

use crate::sequences::Parity;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table of {requested} entries exceeds the memory budget of {budget} entries")]
    ResourceLimit { requested: u64, budget: u64 },

    #[error("value {value} is outside the supported range {min}..={max}")]
    OutOfRange { value: u64, min: u64, max: u64 },

    #[error("values up to {required} are needed but membership is only known up to {limit}")]
    LimitExceeded { required: u64, limit: u64 },

    #[error("expected a sequence of {expected} parity, found {found}")]
    ParityMismatch { expected: Parity, found: Parity },

    #[error("sequences are materialized to different limits ({left} and {right})")]
    LimitMismatch { left: u64, right: u64 },

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("first sequence is not contained in the second ({witness} is missing)")]
    NotSubset { witness: u64 },

    #[error("sequences are not equal")]
    NotEqual,

    #[error("argument {argument} does not lie on the lattice starting at {base} with step 2")]
    BadArgument { argument: u64, base: u64 },

    #[error("recursion produced a negative count {value} at argument {argument}")]
    NegativeCount { argument: u64, value: i128 },

    #[error("arithmetic overflow while evaluating argument {argument}")]
    Overflow { argument: u64 },

    #[error("{0}")]
    Unsupported(&'static str),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
