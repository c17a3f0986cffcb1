//! Dense Hermitian numeric kernel.
//!
//! Everything the quantum instance needs from linear algebra lives here:
//! complex matrices, Hermitian eigendecomposition, PSD square roots,
//! effect/density/projection predicates, and projection meet/join. All
//! routines are deterministic: the same input bits always produce the same
//! output bits, which the verification harness relies on.

mod eig;
mod matrix;
mod projection;

pub use eig::{eig_hermitian, kernel_projector, kernel_projector_default, sqrt_psd, EigenDecomposition};
pub use matrix::ComplexMatrix;
pub use projection::{is_density, is_effect, is_projection, join_projections, meet_projections};

use thiserror::Error;

/// Hermitian-defect bound for matrices tagged Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Relative defect under which `eig_hermitian` accepts its input.
pub const EIG_HERMITIAN_TOL: f64 = 1e-10;
/// Most negative eigenvalue tolerated by `sqrt_psd`.
pub const PSD_TOL: f64 = 1e-9;
/// Default relative cutoff separating kernel eigenvalues from rounding noise.
pub const KERNEL_TOL: f64 = 1e-8;
/// Idempotence defect under which a matrix counts as a projection.
pub const PROJECTION_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("matrix entries must be finite")]
    NonFinite,
    #[error("rows do not form a square matrix")]
    NotSquare,
    #[error("matrix is not Hermitian (defect {defect:.3e})")]
    NonHermitian { defect: f64 },
    #[error("eigensolver failed to converge (dim {dim})")]
    ConvergenceFailure { dim: usize },
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPsd { min_eigenvalue: f64 },
    #[error("operand is not a projection (idempotence defect {defect:.3e})")]
    NotProjection { defect: f64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}
