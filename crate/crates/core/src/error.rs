use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector must have at least one component")]
    EmptyVector,
    #[error("component {index} is not finite")]
    NonFinite { index: usize },
    #[error("bounds at index {index} are not ordered ({lower} >= {upper})")]
    InvalidBounds { index: usize, lower: f64, upper: f64 },
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("invalid weight vector: {0}")]
    InvalidWeights(&'static str),
    #[error("unknown problem `{0}`")]
    UnknownProblem(String),
    #[error("trace iteration {next} does not follow {last}")]
    NonMonotoneIteration { last: usize, next: usize },
    #[error("front error is undefined for an empty archive")]
    EmptyArchive,
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
