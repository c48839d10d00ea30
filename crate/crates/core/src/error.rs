use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not full row rank: row {row} is a combination of the rows before it")]
    RankDeficient { row: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("expected a code over GF({expected}), got GF({found})")]
    WrongField { expected: u8, found: u8 },

    #[error("code dimension must satisfy 0 < k < n (got n={n}, k={k})")]
    DegenerateCode { n: usize, k: usize },

    #[error("minimum distance is unknown; compute it or declare it with `d <int>`")]
    DistanceUnknown,

    #[error("exhaustive enumeration needs {needed} codewords but the cap is {cap}; declare d explicitly")]
    EnumerationCap { needed: u128, cap: u128 },

    #[error("unknown catalog code `{0}`")]
    UnknownCode(String),

    #[error("correction radius {t} exceeds floor((d-1)/2) = {max}")]
    RadiusTooLarge { t: usize, max: usize },

    #[error("syndrome table would hold {needed} entries but the cap is {cap}")]
    TableCap { needed: u128, cap: u128 },

    /// Two correctable errors share a syndrome. With the true distance this
    /// cannot happen, so it points at an overstated declared distance.
    #[error("syndrome collision on key {key}: {first} and {second}")]
    TableCollision { key: String, first: String, second: String },

    #[error("syndrome table does not match the scheme: {0}")]
    TableMismatch(String),

    #[error("malformed syndrome table file: {0}")]
    TableFormat(String),

    #[error("{needed} qubits exceeds the statevector cap of {cap}")]
    QubitCap { needed: usize, cap: usize },

    /// No ancilla outcome carries (almost) all of the probability mass.
    #[error("ancilla register is not in a definite basis state (largest outcome probability {max_probability:.3e})")]
    NonProductState { max_probability: f64 },

    #[error("invalid probability {name} = {value}")]
    InvalidProbability { name: &'static str, value: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
