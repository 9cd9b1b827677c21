use thiserror::Error;

use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// The parameters fall outside the regime an operation is stated for.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    /// A mathematical invariant failed to hold; always a bug.
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
