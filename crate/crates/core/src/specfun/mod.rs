//! Special functions underlying the fading densities and error-rate closed
//! forms: log-gamma, regularized upper incomplete gamma, modified Bessel
//! functions of the first kind, and the confluent / Gauss hypergeometric
//! functions.
//!
//! Several of these quantities overflow f64 long before the parameter ranges
//! of interest are exhausted (the combined-channel prefactors contain terms
//! like `m^m` with `m` in the hundreds). Functions that can grow that large
//! return a [`SpecFunResult`], a `(value, log_scale)` pair representing
//! `value * exp(log_scale)`.

mod bessel;
mod gamma;
mod hyp;

pub use bessel::bessel_i_scaled;
pub use gamma::{gamma_upper_reg, ln_gamma};
pub use hyp::{hyp1f1_scaled, hyp2f1};

pub(crate) use gamma::ln_gamma_raw;

/// A floating-point result carried in scaled form: the represented quantity
/// is `value * exp(log_scale)`.
///
/// `value` stays finite and non-zero unless the represented quantity is
/// exactly zero (then both fields are zero). The split lets magnitudes far
/// outside f64 range travel through intermediate expressions and be combined
/// with other log-space factors without overflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecFunResult {
    pub value: f64,
    pub log_scale: f64,
}

impl SpecFunResult {
    pub fn from_value(value: f64) -> Self {
        SpecFunResult {
            value,
            log_scale: 0.0,
        }
    }

    /// Collapse to a plain f64. Overflows to infinity (or underflows to zero)
    /// if the represented magnitude does not fit.
    pub fn to_f64(self) -> f64 {
        self.value * self.log_scale.exp()
    }

    /// Natural log of the absolute value. `-inf` for an exact zero.
    pub fn ln_abs(self) -> f64 {
        self.value.abs().ln() + self.log_scale
    }

    /// Sign of the represented quantity (`0.0` for an exact zero).
    pub fn signum(self) -> f64 {
        if self.value == 0.0 {
            0.0
        } else {
            self.value.signum()
        }
    }
}
