//! Shared error type for the toolkit.

use num::BigUint;
use thiserror::Error;

/// Everything that can go wrong across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A textual input (ratio, sequence, weight list) did not parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// An exhaustive enumeration would visit more arrangements than the
    /// caller's budget allows.
    #[error("enumeration budget exceeded: instance has {needed} arrangements, budget is {budget}")]
    BudgetExceeded { needed: BigUint, budget: u64 },

    /// The coefficient recurrence divides by a zero binomial at index `k`.
    /// Happens exactly when the ratio is below one.
    #[error("degenerate recurrence at k = {k}: floor(k*mu) = 0 makes the pivot binomial zero")]
    DegenerateRecurrence { k: u64 },

    /// The instance lies outside the domain on which a bound is stated.
    #[error("domain violation: {0}")]
    DomainViolation(&'static str),

    /// No cyclic rotation of the sequence can be cute because the total
    /// weighted sum is negative.
    #[error("not rotatable to cute: total weighted sum a - mu*b is negative")]
    NotRotatableToCute,

    /// A documented precondition was not met.
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// Stable machine-readable name of the variant, used by the CLI for
    /// diagnostics and exit-code mapping.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::DegenerateRecurrence { .. } => "DegenerateRecurrence",
            Error::DomainViolation(_) => "DomainViolation",
            Error::NotRotatableToCute => "NotRotatableToCute",
            Error::Precondition(_) => "PreconditionViolation",
        }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
