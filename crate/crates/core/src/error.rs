use thiserror::Error;

use crate::ordinal::{Ordinal, OrdinalError};

/// Errors raised by the calculus and the constructions built on it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
    #[error("undetermined: {0}")]
    Undetermined(String),
    #[error("{0} is not an epsilon number above rho")]
    NotEpsilon(Ordinal),
    #[error("{x} does not lie in the component I_{alpha}")]
    XNotInComponent { x: Ordinal, alpha: Ordinal },
    #[error("translation not applicable: {0}")]
    NotApplicable(String),
    #[error("xi = {0} is not below rho")]
    XiOutOfRange(Ordinal),
    #[error("{0} is out of range")]
    XOutOfRange(Ordinal),
    #[error("{delta} is not divisible by {kappa}")]
    DeltaNotDivisible { delta: Ordinal, kappa: Ordinal },
    #[error("domain is not closed: missing {0}")]
    DomainNotClosed(Ordinal),
    #[error("image {0} of a divisible member is not divisible by rho")]
    ImageNotDivisible(Ordinal),
    #[error("index set violates clause {clause}: {detail}")]
    ClauseViolation { clause: u8, detail: String },
    #[error("sets have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("invariant violated: {0}")]
    Violation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn undetermined(reason: impl Into<String>) -> Error {
    Error::Undetermined(reason.into())
}
