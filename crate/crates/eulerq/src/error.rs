//! Error type shared by every evaluation routine.

use thiserror::Error;

/// Everything that can go wrong while evaluating a series, product or
/// integral in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    /// An argument violated an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The truncation criterion was not met within the configured budget.
    #[error("truncation criterion not met within {max_terms} terms")]
    MaxTermsExceeded { max_terms: usize },

    /// Evaluation hit a pole (for example `e_q` at `z = q^-n`).
    #[error("pole encountered: {0}")]
    Pole(String),

    /// The requested series diverges for the given argument.
    #[error("series diverges: {0}")]
    DivergentSeries(String),

    /// A denominator Pochhammer factor vanished at term `k`.
    #[error("zero denominator factor at term {k}")]
    ZeroDenominator { k: usize },

    /// An identity id not present in the registry.
    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),
}

impl EvalError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        EvalError::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, EvalError>;
