use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{func}: argument outside domain ({detail})")]
    Domain { func: &'static str, detail: String },

    #[error("{func}: no convergence after {iterations} iterations")]
    Convergence { func: &'static str, iterations: usize },

    #[error("{func}: result overflows f64")]
    Overflow { func: &'static str },

    #[error("{func}: result underflows f64")]
    Underflow { func: &'static str },

    #[error("quadrature did not converge: error estimate {estimate:e} > tolerance {tol:e} after {panels} panels")]
    QuadNonConvergence { estimate: f64, tol: f64, panels: usize },

    #[error("integrand returned a non-finite value at t = {at}")]
    NonFinite { at: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("missing derivative data: {0}")]
    MissingData(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        func,
        detail: detail.into(),
    }
}

pub(crate) fn ensure_finite(func: &'static str, args: &[f64]) -> Result<()> {
    match args.iter().find(|v| !v.is_finite()) {
        Some(v) => Err(domain(func, format!("non-finite argument {v}"))),
        None => Ok(()),
    }
}
