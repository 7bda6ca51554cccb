use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(String),

    #[error("table format error: {0}")]
    TableFormat(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("quandle enumeration supports 1 <= n <= 6, got {0}")]
    EnumerationRange(usize),

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("model construction failed: {0}")]
    Model(String),

    #[error("unknown model `{0}`")]
    UnknownModel(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
