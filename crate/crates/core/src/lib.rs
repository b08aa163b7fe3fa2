//! Average bit error rates for MIMO space-time block codes over generalized
//! fading channels with additive white generalized Gaussian noise.
//!
//! The crate evaluates the average error probability
//!
//! ```text
//! Pe = A * integral_0^inf f(gamma) * Q_a(sqrt(B * gamma)) d gamma
//! ```
//!
//! three independent ways and cross-checks them:
//!
//! - **Closed forms** ([`aber::aber_eta_mu_closed`], [`aber::aber_kms_closed`])
//!   built from a four-exponential approximation of the generalized Q-function
//!   and hypergeometric identities.
//! - **Adaptive quadrature** of the defining integral ([`aber::aber_quadrature`]),
//!   with either the exact Q-function or the same exponential approximation.
//! - **Monte Carlo** over channel realizations ([`aber::aber_monte_carlo`]).
//!
//! Supported channels are the eta-mu / lambda-mu family and the kappa-mu
//! shadowed family (which covers Rayleigh, Rician, Nakagami-m, Hoyt,
//! one-sided Gaussian and kappa-mu as special cases), combined over
//! `nt * nr` antenna branches. Noise shapes cover Laplacian (a = 1),
//! Gaussian (a = 2) and anything in between or beyond (a > 0).
//!
//! [`verification`] packages the full cross-check battery behind a single
//! entry point; the `aber` CLI exposes it as `aber verify`.

pub mod aber;
pub mod error;
pub mod fading;
pub mod ggn;
pub mod modulation;
pub mod quad;
pub mod report;
pub mod specfun;
pub mod verification;

pub use error::{Error, Result};
