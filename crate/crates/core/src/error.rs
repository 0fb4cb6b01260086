use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("accuracy target missed in {context}: achieved error {achieved:e}")]
    Accuracy { context: String, achieved: f64 },

    #[error("non-finite term at index {index}")]
    NonFinite { index: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = ZetaError> = std::result::Result<T, E>;

impl ZetaError {
    pub(crate) fn accuracy(context: impl Into<String>, achieved: f64) -> Self {
        ZetaError::Accuracy {
            context: context.into(),
            achieved,
        }
    }
}
