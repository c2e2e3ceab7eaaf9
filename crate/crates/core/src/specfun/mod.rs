//! Real special functions: Γ, β, the non-regularized incomplete β and
//! Gauss' ₂F₁.
//!
//! All entry points reject non-finite or out-of-domain arguments with
//! [`Error::Domain`](crate::Error::Domain) instead of returning NaN, so a
//! caller can always tell a domain problem from a numerical discrepancy.

mod beta;
mod gamma;
mod hyp2f1;

pub use beta::{beta, beta_value, inc_beta, inc_beta_value, ln_beta, ln_inc_beta};
pub use gamma::{gamma, gamma_value, ln_gamma};
pub use hyp2f1::{hyp2f1, hyp2f1_value, MAX_TERMS};

use serde::Serialize;

/// A special-function value together with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpecialValue {
    pub value: f64,
    pub abs_error_bound: f64,
}

impl SpecialValue {
    pub(crate) fn new(value: f64, abs_error_bound: f64) -> Self {
        debug_assert!(value.is_finite());
        debug_assert!(abs_error_bound >= 0.0);
        SpecialValue {
            value,
            abs_error_bound,
        }
    }
}
