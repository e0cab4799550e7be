use thiserror::Error;

/// Errors raised by the library.
///
/// The CLI maps these onto exit codes: precision exhaustion is 3,
/// argument and parse problems are 2, everything else is 1.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("not divisible, remainder has {} term(s): {remainder}", .terms)]
    Divisibility { remainder: String, terms: usize },
    #[error("coefficient index {index} out of range 0..={cap}")]
    Range { index: usize, cap: usize },
    #[error("missing table entry C[{s},{k}]")]
    Lookup { s: u32, k: u32 },
    #[error("polynomial is not invariant under the Weil symmetry group")]
    Invariance,
    #[error("precision exhausted at {bits} bits: {detail}")]
    Precision { bits: u64, detail: String },
    #[error("integrality violated: {0}")]
    Integrality(String),
    #[error("internal consistency: {0}")]
    Internal(String),
    #[error("theorem violation: {0}")]
    Violation(String),
    #[error("numeric: {0}")]
    Numeric(String),
    #[error("domain: {0}")]
    Domain(String),
    #[error("parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Precision { .. } => 3,
            Error::Argument(_) | Error::Parse(_) | Error::Domain(_) => 2,
            _ => 1,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
