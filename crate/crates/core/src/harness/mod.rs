//! Command-line harness: configuration, sweeps, audits and reports.

pub mod commands;
pub mod config;
pub mod report;
pub mod sampling;

pub use commands::{
    audit_grid, audit_kernels, compare_bounds, kernel_constants, reduce, run, specfun_table, verify_bounds,
    verify_identity,
};
pub use config::{Format, SweepConfig};
pub use report::{write_report, Record, Report, Summary};

/// Exit status for usage and I/O errors.
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error(transparent)]
    Numerical(#[from] crate::Error),
}
