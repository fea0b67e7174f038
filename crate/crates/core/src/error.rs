use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("b[{0}] is zero; the ratio a/conj(b) is undefined")]
    ZeroDenominator(usize),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("inapplicable: {0}")]
    Inapplicable(String),

    /// Two algebraically identical forms of a condition disagree. Never
    /// expected; signals an evaluation bug.
    #[error("equivalent condition forms disagree at {index:?}: quadratic {quadratic}, disk {disk}")]
    EquivalenceMismatch {
        index: Option<usize>,
        quadratic: f64,
        disk: f64,
    },

    #[error("empty input")]
    EmptyInput,

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("unknown theorem '{0}'")]
    UnknownTheorem(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
