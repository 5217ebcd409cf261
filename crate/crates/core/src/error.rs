use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("degree of the zero element is undefined")]
    UndefinedDegree,
    #[error("no derivation rule for generator {0}")]
    MissingRule(String),
    #[error("series is not a unit: constant term must be 1")]
    NonUnit,
    #[error("window incompatible with truncation order: {0}")]
    WindowOverflow(String),
    #[error("index vector {0:?} lies outside the table window")]
    OutOfWindow(Vec<i64>),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("not a strict partition: {0:?}")]
    NonStrictPartition(Vec<u32>),
    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<i64>),
    #[error("no value supplied for generator {0}")]
    MissingValue(String),
    #[error("evaluation points coincide: {0}")]
    CoincidentPoints(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
