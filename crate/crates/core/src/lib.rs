//! Numerical laboratory for fractional Hermite–Hadamard and Simpson type
//! inequalities on functions whose second derivative has an s-convex
//! q-th power.
//!
//! Every closed-form constant and every bound is paired with an
//! independent brute-force route through adaptive quadrature:
//!
//! * [`specfun`]: Γ, β, incomplete β and ₂F₁ on the real domains needed.
//! * [`quad`]: adaptive Gauss–Kronrod integration, including algebraic
//!   endpoint weights.
//! * [`fracint`]: left and right Riemann–Liouville integrals.
//! * [`kernels`]: the C1–C4 / H1–H3 constants and their integral oracles.
//! * [`identity`]: both sides of the integral identity for `I_f`.
//! * [`theorems`]: the power-mean and Hölder bounds, their specialisations
//!   and the classical comparison bounds.
//! * [`corpus`]: certified test-function families and a sampled
//!   s-convexity checker.
//! * [`harness`]: sweeps, audits and JSON/CSV reports behind the CLI.

pub mod corpus;
pub mod error;
pub mod fracint;
pub mod harness;
pub mod identity;
pub mod kernels;
pub mod quad;
pub mod specfun;
pub mod theorems;

pub use error::{Error, Result};
