use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("eigensolver did not converge after {restarts} restarts (best residual {residual:.3e}){context}")]
    Convergence {
        restarts: usize,
        residual: f64,
        context: String,
    },

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("contract violation: {0}")]
    Contract(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    /// Attach a human-readable location to a convergence failure.
    pub fn with_context(self, ctx: impl AsRef<str>) -> Self {
        match self {
            Error::Convergence {
                restarts,
                residual,
                context,
            } => Error::Convergence {
                restarts,
                residual,
                context: format!("{context} [{}]", ctx.as_ref()),
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
