//! The three concrete sequential effect algebras: finite Boolean algebras,
//! fuzzy sets on a finite ground set, and quantum effects on a
//! finite-dimensional Hilbert space.

mod boolean;
mod fuzzy;
mod quantum;

pub use boolean::{AtomWeights, BooleanElement, BooleanSea};
pub use fuzzy::{FuzzyElement, FuzzySea, PointWeights};
pub use quantum::{DensityMatrix, QuantumEffect, QuantumSea};

use thiserror::Error;

/// Largest supported ground-set size / Hilbert-space dimension.
pub const MAX_SIZE: usize = 64;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("size must be between 1 and {MAX_SIZE}, got {0}")]
    BadSize(usize),
    #[error("atom index {index} out of range for ground size {ground_size}")]
    IndexOutOfRange { index: usize, ground_size: usize },
    #[error("membership {value} at point {index} lies outside [0, 1]")]
    BadMembership { index: usize, value: f64 },
    #[error("expected {expected} entries, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("weights must be nonnegative and sum to 1 (sum {sum})")]
    BadWeights { sum: f64 },
    #[error("matrix is not Hermitian (defect {defect:.3e})")]
    NotHermitian { defect: f64 },
    #[error("spectrum [{min:.6e}, {max:.6e}] lies outside the effect interval")]
    NotEffect { min: f64, max: f64 },
    #[error("matrix is not a density matrix (trace {trace}, min eigenvalue {min_eigenvalue:.3e})")]
    NotDensity { trace: f64, min_eigenvalue: f64 },
    #[error(transparent)]
    Spectral(#[from] crate::spectral::SpectralError),
}
