use thiserror::Error;

/// Errors surfaced by the fallible entry points.
///
/// Classification itself never fails on degenerate inputs — those are
/// flagged on the report instead — so this enum covers input validation
/// and precondition violations only.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A coefficient was NaN or infinite, or the input was otherwise malformed.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The cosine substitution requires m < 0.
    #[error(transparent)]
    MethodNotApplicable(#[from] MethodNotApplicable),

    /// A bracketing routine was handed an interval without a strict sign change.
    #[error("no sign change across [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    /// The zero polynomial has no Sturm chain, no Cauchy bound and no roots to count.
    #[error("zero polynomial")]
    ZeroPolynomial,
}

/// Typed, recoverable outcome of `reduce` when the cubic coefficient is
/// nonnegative: the substitution scale u = 2·sqrt(−m/5) does not exist.
///
/// Callers are expected to fall back to the Sturm oracle; the classifier
/// does this automatically and labels the report.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("cosine substitution not applicable: m = {m} is not negative")]
pub struct MethodNotApplicable {
    /// The offending cubic coefficient.
    pub m: f64,
}

pub type Result<T> = std::result::Result<T, Error>;
