use super::eig::{eig_hermitian, kernel_projector};
use super::matrix::ComplexMatrix;
use super::{SpectralError, KERNEL_TOL, PROJECTION_TOL};

fn hermitian_within(m: &ComplexMatrix, tol: f64) -> bool {
    m.hermitian_defect() <= tol * m.frobenius_norm().max(1.0)
}

/// True iff `m` is Hermitian with spectrum inside [−tol, 1 + tol].
pub fn is_effect(m: &ComplexMatrix, tol: f64) -> bool {
    if !hermitian_within(m, tol.max(super::EIG_HERMITIAN_TOL)) {
        return false;
    }
    match eig_hermitian(&m.hermitized()) {
        Ok(eig) => eig.min_eigenvalue() >= -tol && eig.max_eigenvalue() <= 1.0 + tol,
        Err(_) => false,
    }
}

/// True iff `m` is Hermitian PSD with unit trace, all within `tol`.
pub fn is_density(m: &ComplexMatrix, tol: f64) -> bool {
    if !hermitian_within(m, tol.max(super::EIG_HERMITIAN_TOL)) {
        return false;
    }
    let trace = m.trace();
    if (trace.re - 1.0).abs() > tol || trace.im.abs() > tol {
        return false;
    }
    match eig_hermitian(&m.hermitized()) {
        Ok(eig) => eig.min_eigenvalue() >= -tol,
        Err(_) => false,
    }
}

/// True iff `m` is an effect whose idempotence defect ‖M² − M‖_F is at most `tol`.
pub fn is_projection(m: &ComplexMatrix, tol: f64) -> bool {
    is_effect(m, tol) && idempotence_defect(m) <= tol
}

fn idempotence_defect(m: &ComplexMatrix) -> f64 {
    (&(m * m) - m).frobenius_norm()
}

fn require_projection(m: &ComplexMatrix) -> Result<(), SpectralError> {
    if !is_projection(m, PROJECTION_TOL) {
        return Err(SpectralError::NotProjection {
            defect: idempotence_defect(m),
        });
    }
    Ok(())
}

/// Projection onto range(P) ∩ range(Q), computed as the kernel projector of
/// (I − P) + (I − Q): a vector is in both ranges exactly when both
/// complements annihilate it.
pub fn meet_projections(p: &ComplexMatrix, q: &ComplexMatrix) -> Result<ComplexMatrix, SpectralError> {
    if p.dim() != q.dim() {
        return Err(SpectralError::DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    require_projection(p)?;
    require_projection(q)?;
    let id = ComplexMatrix::identity(p.dim());
    kernel_projector(&(&(&id - p) + &(&id - q)), KERNEL_TOL)
}

/// Join by De Morgan: the complement of the meet of the complements.
pub fn join_projections(p: &ComplexMatrix, q: &ComplexMatrix) -> Result<ComplexMatrix, SpectralError> {
    if p.dim() != q.dim() {
        return Err(SpectralError::DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    require_projection(p)?;
    require_projection(q)?;
    let id = ComplexMatrix::identity(p.dim());
    let meet_of_complements = kernel_projector(&(p + q), KERNEL_TOL)?;
    Ok(&id - &meet_of_complements)
}
