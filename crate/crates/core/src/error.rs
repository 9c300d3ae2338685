use thiserror::Error;

/// Failure modes shared by every module in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("image array is not a permutation: {0}")]
    NonBijection(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("partition {index} is not invariant under the group")]
    NotInvariant { index: usize },
    #[error("invalid Cartesian decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid Cartesian system: {0}")]
    InvalidSystem(String),
    #[error("group is not innately transitive and no plinth was supplied")]
    NotInnatelyTransitive,
    #[error("decomposition is not homogeneous")]
    NotHomogeneous,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("not a factorisation: {0}")]
    NotFactorisation(String),
    #[error("unknown case {0}")]
    UnknownCase(String),
    #[error("order mismatch for {what}: expected {expected}, computed {computed}")]
    OrderMismatch {
        what: String,
        expected: u128,
        computed: u128,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

impl Error {
    /// Stable machine-readable tag used in CLI error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonBijection(_) => "NonBijection",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::PointOutOfRange { .. } => "PointOutOfRange",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::NotTransitive => "NotTransitive",
            Error::NotInvariant { .. } => "NotInvariant",
            Error::InvalidDecomposition(_) => "InvalidDecomposition",
            Error::InvalidSystem(_) => "InvalidSystem",
            Error::NotInnatelyTransitive => "NotInnatelyTransitive",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::NotSubgroup(_) => "NotSubgroup",
            Error::NotFactorisation(_) => "NotFactorisation",
            Error::UnknownCase(_) => "UnknownCase",
            Error::OrderMismatch { .. } => "OrderMismatch",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Io(_) => "Io",
            Error::Json(_) => "Json",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
