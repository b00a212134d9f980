use thiserror::Error;

/// Everything that can go wrong inside the workbench.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition on the input does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The grid, mesh or sweep is too coarse to resolve the answer.
    #[error("insufficient resolution: {0}")]
    Resolution(String),

    /// A finite-difference estimate misses the requested accuracy.
    #[error("tolerance not met: {0}")]
    Tolerance(String),

    /// The integrated solution vanished identically.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid census: {0}")]
    InvalidCensus(String),

    /// Two independent routes disagree. Indicates a solver bug.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("malformed potential table: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        if e.is_io_error() {
            match e.into_kind() {
                csv::ErrorKind::Io(io) => Error::Io(io),
                other => Error::Format(format!("{other:?}")),
            }
        } else {
            Error::Format(e.to_string())
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
