use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("graph is not simple: {0}")]
    NotSimple(String),

    #[error("matrix support does not match the graph: {0}")]
    SupportMismatch(String),

    #[error("label {0} appears more than once")]
    DuplicateLabel(u64),

    #[error("labeling does not fit the graph: {0}")]
    LabelMismatch(String),

    #[error("construction failed verification: {0}")]
    VerificationFailure(String),

    #[error("{0} is only known from a cited result; no construction is provided")]
    CitedOnly(String),

    #[error("search refused: {0}")]
    Guard(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
