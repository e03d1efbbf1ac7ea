use thiserror::Error;

use crate::subset::SubsetMask;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or mismatched arguments (sizes, labels, ranges).
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A lower bound that does not lie below its upper bound in the Gale order.
    #[error("{lower} is not below {upper} in the Gale order")]
    Order { lower: SubsetMask, upper: SubsetMask },
    /// Well-formed input outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Stable machine-readable reason code.
    pub fn reason_code(&self) -> &'static str {
        match self {
            Error::Argument(_) => "argument",
            Error::Order { .. } => "order",
            Error::Domain(_) => "domain",
        }
    }
}
