use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::{SpectralError, EIG_HERMITIAN_TOL, KERNEL_TOL, PSD_TOL};

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
/// order and a unitary matrix whose columns are the matching eigenvectors.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("nonempty spectrum")
    }

    /// V · diag(f(λ)) · V†, hermitized.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let dim = self.eigenvalues.len();
        let v = self.eigenvectors.as_dmatrix();
        let mut scaled = v.clone();
        for (j, lambda) in self.eigenvalues.iter().enumerate() {
            let factor = Complex64::new(f(*lambda), 0.0);
            for i in 0..dim {
                scaled[(i, j)] *= factor;
            }
        }
        ComplexMatrix::from_dmatrix(scaled * v.adjoint()).hermitized()
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_spectrum(|lambda| lambda)
    }
}

/// Eigendecomposition of a Hermitian matrix with ascending eigenvalues.
///
/// The input must be Hermitian within `EIG_HERMITIAN_TOL` relative to its
/// norm; it is hermitized before factoring so the solver always sees an
/// exactly Hermitian operand.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<EigenDecomposition, SpectralError> {
    let defect = m.hermitian_defect();
    if defect > EIG_HERMITIAN_TOL * m.frobenius_norm().max(1.0) {
        return Err(SpectralError::NonHermitian { defect });
    }
    let dim = m.dim();
    let sym = m
        .hermitized()
        .as_dmatrix()
        .clone()
        .try_symmetric_eigen(f64::EPSILON, 100 + 30 * dim * dim)
        .ok_or(SpectralError::ConvergenceFailure { dim })?;

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| sym.eigenvalues[a].total_cmp(&sym.eigenvalues[b]));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| sym.eigenvalues[i]).collect();
    let eigenvectors = ComplexMatrix::from_fn(dim, |i, j| sym.eigenvectors[(i, order[j])]);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Eigenvalues below this fraction of λ_max count as numerically zero when
/// taking square roots. Without the snap, a rounding-level eigenvalue ε
/// turns into a √ε ≈ 1e-8 artifact in the root — far above the noise the
/// rest of the kernel produces.
pub const SQRT_SNAP: f64 = 1e-13;

/// Principal square root of a PSD Hermitian matrix.
///
/// Eigenvalues in [−PSD_TOL, 0) are treated as rounding noise and clipped
/// to zero; anything more negative is an error. Eigenvalues below
/// `SQRT_SNAP · λ_max` are snapped to zero, which keeps (result)² within
/// 1e-13 of the input while preventing √ε amplification on numerically
/// rank-deficient operands such as constructed projections.
pub fn sqrt_psd(m: &ComplexMatrix) -> Result<ComplexMatrix, SpectralError> {
    let eig = eig_hermitian(m)?;
    let min = eig.min_eigenvalue();
    if min < -PSD_TOL {
        return Err(SpectralError::NotPsd {
            min_eigenvalue: min,
        });
    }
    let snap = SQRT_SNAP * eig.max_eigenvalue().max(0.0);
    Ok(eig.map_spectrum(|lambda| if lambda <= snap { 0.0 } else { lambda.sqrt() }))
}

/// Projection onto the span of eigenvectors with eigenvalue at or below
/// `tol · max(1, λ_max)`. Full-rank input yields the zero matrix.
pub fn kernel_projector(m: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix, SpectralError> {
    let eig = eig_hermitian(m)?;
    let threshold = tol * eig.max_eigenvalue().max(1.0);
    Ok(eig.map_spectrum(|lambda| if lambda <= threshold { 1.0 } else { 0.0 }))
}

/// `kernel_projector` at the default cutoff.
pub fn kernel_projector_default(m: &ComplexMatrix) -> Result<ComplexMatrix, SpectralError> {
    kernel_projector(m, KERNEL_TOL)
}
