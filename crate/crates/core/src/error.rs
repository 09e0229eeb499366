use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph order {n} exceeds the supported limit of {limit} for {what}")]
    TooLarge { what: &'static str, n: usize, limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported pattern: {0}")]
    UnsupportedPattern(String),

    #[error("polynomial is not standard (leading coefficient must be positive)")]
    NonStandard,

    #[error("{which} is not real-rooted")]
    NotRealRooted { which: &'static str },

    #[error("root iteration did not converge at {precision_bits} bits after {iterations} iterations")]
    NoConvergence { precision_bits: usize, iterations: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
