//! Error types shared by every module of the library.
//!
//! All fallible operations return [`Result`]. The variants distinguish the
//! failure modes that matter to callers: genuine poles (which carry the pole
//! location so a caller can decide whether a removable combination applies),
//! domain violations, branch-cut hits, loss of significance, and exhausted
//! iteration or evaluation budgets.

use num_complex::Complex64;

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Error cases surfaced by evaluation routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested point is a pole of the function.
    #[error("pole of {context} at {location}")]
    Pole {
        /// Location of the pole in the complex plane.
        location: Complex64,
        /// Which function or prefactor is singular there.
        context: String,
    },

    /// The requested point is a non-pole singularity (e.g. a logarithmic
    /// branch point).
    #[error("singularity: {0}")]
    Singularity(String),

    /// The evaluation sits on a branch cut and the caller did not specify
    /// from which side the limit should be taken.
    #[error("branch cut: {0}")]
    BranchCut(String),

    /// Catastrophic cancellation detected: the direct series would lose more
    /// relative accuracy than the declared threshold permits.
    #[error("cancellation: estimated relative loss {estimate:.3e} exceeds {limit:.3e}")]
    Cancellation {
        /// Estimated relative error from cancellation.
        estimate: f64,
        /// The refusal threshold.
        limit: f64,
    },

    /// A series or iteration failed to converge within the configured caps.
    #[error("no convergence after {terms} terms (abs_err ≈ {abs_err:.3e})")]
    NoConvergence {
        /// Terms consumed before giving up.
        terms: usize,
        /// Error estimate at the point of giving up.
        abs_err: f64,
    },

    /// The parameter regime of an identity or bound is not satisfied.
    #[error("regime error: {0}")]
    Regime(String),

    /// A certified remainder bound was violated by the computed remainder.
    #[error("bound violation: {0}")]
    BoundViolation(String),

    /// Evaluation budget (function evaluations, subdivisions) exhausted.
    #[error("budget exhausted: {0}")]
    Budget(String),

    /// A finite-precision overflow or non-finite intermediate was produced.
    #[error("overflow: {0}")]
    Overflow(String),

    /// Bad user-facing input (unknown name, malformed literal).
    #[error("usage error: {0}")]
    Usage(String),

    /// Underlying I/O failure while emitting a report.
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Convenience constructor for pole errors.
    pub fn pole(location: Complex64, context: impl Into<String>) -> Self {
        Error::Pole {
            location,
            context: context.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
