use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degenerate least-squares fit: {0}")]
    DegenerateFit(String),

    #[error("iterate diverged at iteration {iteration} on segment {segment}")]
    Divergence { segment: usize, iteration: usize },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("root not found: {0}")]
    RootNotFound(String),

    #[error("found {found} characteristic values, {requested} requested")]
    InsufficientRoots { found: usize, requested: usize },

    #[error("shooting failed: {0}")]
    ShootingFailure(String),

    #[error("domain mismatch: {0}")]
    Domain(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("{context}: {source}")]
    Context { context: String, source: Box<Error> },
}

impl Error {
    /// Attaches a description of where the error happened.
    pub fn context(self, context: impl Into<String>) -> Error {
        Error::Context { context: context.into(), source: Box::new(self) }
    }

    /// The innermost error, with all context layers removed.
    pub fn root_cause(&self) -> &Error {
        match self {
            Error::Context { source, .. } => source.root_cause(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
