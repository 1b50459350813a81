//! Error type shared by all engines.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input data.
    #[error("input error: {0}")]
    Input(String),

    /// An enumeration exceeded its configured budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Minimal-generator search was cut off before it could close.
    #[error("generator search inconclusive: {0}")]
    FrontierInconclusive(String),

    /// A matrix operation that requires an FFRT closure was asked for
    /// without one.
    #[error("closure did not reach a fixed point; not certified FFRT")]
    NotFfrt,

    /// Character-theoretic decomposition produced a non-integral
    /// multiplicity, which signals inconsistent input data.
    #[error("non-integral multiplicity for irreducible {index}: {value}")]
    NonIntegralMultiplicity { index: usize, value: String },

    /// The rank vector failed to be an exact left eigenvector.
    #[error("eigenvector check failed: {0}")]
    EigenCheckFailed(String),

    /// No power of the matrix within the Wielandt bound is positive.
    #[error("matrix is not primitive (no positive power up to the Wielandt bound {bound})")]
    NotPrimitive { bound: usize },

    /// A truncated-operator verdict would require data outside the
    /// certified part of the window.
    #[error("window too small: {0}")]
    WindowTooSmall(String),

    /// Relation/generator enumeration for a summand presentation was cut off.
    #[error("summand presentation incomplete: {0}")]
    PresentationIncomplete(String),

    /// An internal conservation or integrality check failed. This is a bug
    /// or a violated precondition and aborts the run.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 1 input, 2 inconclusive/budget,
    /// 3 internal invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Io(_) => 1,
            Error::BudgetExceeded(_)
            | Error::FrontierInconclusive(_)
            | Error::NotFfrt
            | Error::NotPrimitive { .. }
            | Error::WindowTooSmall(_)
            | Error::PresentationIncomplete(_) => 2,
            Error::NonIntegralMultiplicity { .. }
            | Error::EigenCheckFailed(_)
            | Error::Internal(_) => 3,
        }
    }
}
