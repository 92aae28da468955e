use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function has a pole at {0}")]
    Pole(f64),

    #[error("gamma function overflows at {0}")]
    Overflow(f64),

    /// A parameter-region predicate failed. `requirement` is the predicate text.
    #[error("{what} requires {requirement} (got μ={mu}, ν={nu})")]
    Region {
        what: &'static str,
        requirement: &'static str,
        mu: f64,
        nu: f64,
    },

    #[error("series for {what} did not reach the requested tolerance within {max_terms} terms")]
    NonConvergence { what: &'static str, max_terms: usize },

    #[error("invalid argument: {0}")]
    Domain(String),

    #[error("unknown id `{0}`")]
    UnknownId(String),

    #[error("no sign change of the derivative on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error(transparent)]
    Io(#[from] IoError),
}

/// I/O and serialization failures, flattened to strings so `Error` stays `Clone + PartialEq`.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{0}")]
pub struct IoError(pub String);

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(IoError(e.to_string()))
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(IoError(e.to_string()))
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(IoError(e.to_string()))
    }
}
