use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    /// The series tail could not be pushed below the requested tolerance
    /// within the configured number of asymptotic terms.
    #[error("precision 1e-{digits} unreachable within a budget of {budget} tail terms")]
    PrecisionUnreachable { digits: u32, budget: usize },

    #[error("quadrature did not converge to 1e-{digits} within {max_level} levels")]
    NonConvergence { digits: u32, max_level: u32 },

    /// A certificate failed its own substitution check. Indicates a bug.
    #[error("certificate for {0} failed substitution check")]
    CertificateRejected(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
