use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("zero polynomial has no root set")]
    ZeroPolynomial,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("division by zero")]
    ZeroDivision,
    #[error("multiplicative closure contains zero")]
    ContainsZero,
    #[error("ring table violates {0}")]
    Axiom(String),
    #[error("guard exceeded: {0}")]
    Guard(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
}

impl Error {
    /// True for guard and budget failures, which signal resource limits
    /// rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::Guard(_) | Error::Budget(_))
    }
}
