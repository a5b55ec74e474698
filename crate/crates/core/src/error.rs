use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cayley table is malformed: {0}")]
    Malformed(String),
    #[error("no identity element in the table")]
    MissingIdentity,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("table is not a latin square: {line} {index} repeats element {element}")]
    NotLatin { line: &'static str, index: usize, element: usize },
    #[error("product is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("order {order} exceeds the cap of {cap} for {what}")]
    SizeCap { what: &'static str, order: usize, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("map is not equivariant: f({x}*{set}) != {x}*f({set})")]
    NotEquivariant { x: usize, set: String },
    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),
    #[error("budget of {budget} exhausted after {count} items")]
    Budget { budget: u64, count: u64 },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal consistency violated: {0}")]
    Violation(String),
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
        Error::Malformed(e.to_string())
    }
}
