use thiserror::Error;

/// Crate-wide error type.
///
/// `EmptyResult` marks "the computation is valid but there is nothing to
/// report" conditions (no eligible artists, no data in the requested window,
/// insufficient series overlap). The CLI maps those to exit code 3 and every
/// other failure to exit code 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("malformed header: expected `{expected}`, found `{found}`")]
    MalformedHeader { expected: String, found: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0}")]
    EmptyResult(String),

    #[error("undefined Sharpe: zero volatility")]
    UndefinedSharpe,
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn empty(msg: impl Into<String>) -> Self {
        Error::EmptyResult(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
