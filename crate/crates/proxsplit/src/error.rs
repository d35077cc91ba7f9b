use crate::shape::Shape;

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Operand shapes are incompatible.
    #[error("shape mismatch: expected {expected:?}, got {got:?}")]
    ShapeMismatch { expected: Shape, got: Shape },

    /// Invalid configuration. The message names the violated condition,
    /// including the step-size/relaxation labels (A0)/(A1)/(A2) where relevant.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A proximity operator was requested for an operator composition that
    /// has no closed form here.
    #[error("unsupported prox: {0}")]
    UnsupportedProx(String),

    /// An iterate became non-finite.
    #[error("numerical failure at iteration {iteration}: {detail}")]
    NumericalFailure { iteration: usize, detail: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed input file (PGM image or problem config).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
