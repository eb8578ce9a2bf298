use thiserror::Error;

use crate::game::CeViolation;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The dual characterization only classifies correlated equilibria.
    #[error("distribution is not a correlated equilibrium: {0}")]
    NotCorrelatedEquilibrium(Box<CeViolation>),

    #[error("enumeration needs {required} product supports, over the cap of {cap}")]
    CapExceeded { required: u128, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
