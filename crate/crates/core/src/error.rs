use thiserror::Error;

use crate::chow::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("series is not a unit: constant term is zero")]
    NonUnit,

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("degenerate invariants (chi = {chi}, Eu = {eu}): need chi != 1 and chi != Eu")]
    DegenerateInvariants {
        chi: Box<Rational>,
        eu: Box<Rational>,
    },

    #[error("underdetermined invariant system: {0}")]
    Underdetermined(String),

    #[error("inconsistent invariant system: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
