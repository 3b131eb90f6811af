//! Adjacency spectra and lower bounds on maximum nullity.

mod bounds;
mod eigen;
mod matrix;
mod minor;
mod report;

use thiserror::Error;

pub use bounds::{
    adjacency_nullity, max_multiplicity, max_multiplicity_bound, twin_bound, twin_classes,
};
pub use eigen::{
    cluster, eigen_decomposition, Cluster, SpectralReport, CLUSTER_GAP, DEFAULT_TOL, MAX_SWEEPS,
};
pub use matrix::{SymMatrix, SYMMETRY_TOL};
pub use minor::{
    check_minor_model, find_complete_minor, verify_minor_model, MinorModel, MinorViolation,
    MINOR_SEARCH_MAX_ORDER,
};
pub use report::{
    bounds_report, BoundSource, BoundsError, BoundsOptions, BoundsReport, Upper, Verdict,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("matrix data of length {len} does not fit order {n}")]
    Shape { n: usize, len: usize },
    #[error("entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("no convergence after {sweeps} sweeps (off-diagonal norm {off_diagonal:e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },
}
