//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument fell outside the mathematical domain of an operation.
    #[error("domain error in {what}: {detail}")]
    Domain { what: &'static str, detail: String },

    /// The eta-mu compact form is singular (eta = 1 or lambda = 0 make H = 0).
    /// The kappa-mu shadowed representation covers these cases exactly.
    #[error("degenerate eta-mu channel ({detail}); use the kappa-mu shadowed \
             representation instead (kappa = 0 reproduces Nakagami-type fading)")]
    DegenerateChannel { detail: String },

    /// No built-in Q-function fit is stored for this noise shape.
    #[error("no built-in fit for noise shape a = {a}; run `refit` to generate one")]
    UntabulatedShape { a: f64 },

    /// The nonlinear fit did not reach the required quality. The best iterate
    /// found is carried so callers can inspect or accept it anyway.
    #[error("exponential-sum fit for a = {a} did not converge: best max abs \
             error {achieved:.3e} exceeds budget {budget:.3e}")]
    FitFailed {
        a: f64,
        achieved: f64,
        budget: f64,
        best: Box<crate::ggn::ExpApprox>,
    },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature did not converge: estimated error {estimate:.3e} after \
             {intervals} intervals (tolerance {tolerance:.3e})")]
    QuadratureBudget {
        estimate: f64,
        tolerance: f64,
        intervals: usize,
    },

    /// A sweep failed at a specific grid point.
    #[error("sweep failed at {snr_db} dB: {source}")]
    SweepPoint {
        snr_db: f64,
        #[source]
        source: Box<Error>,
    },

    /// A serialized fit table or key-value block could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn domain(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            what,
            detail: detail.into(),
        }
    }
}
