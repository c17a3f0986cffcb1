use super::{InstanceError, MAX_SIZE};
use crate::algebra::{MeetError, SequentialEffectAlgebra, SharpMeet};
use crate::spectral::{
    eig_hermitian, is_density, meet_projections, sqrt_psd, ComplexMatrix, EigenDecomposition,
    HERMITIAN_TOL, PROJECTION_TOL,
};

/// Default spectral tolerance: ⊕ definedness, ≤, and approximate equality.
pub const QUANTUM_TOL: f64 = 1e-9;
/// Idempotence defect under which an effect counts as sharp.
pub const SHARP_TOL: f64 = 1e-8;
/// Spectrum clip amounts above this are logged as warnings.
const CLIP_WARN: f64 = 1e-6;

/// Hermitian matrix with spectrum in [0, 1], stored hermitized.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumEffect {
    matrix: ComplexMatrix,
}

impl QuantumEffect {
    /// Validates hermiticity and the effect interval. Spectra that poke out
    /// of [0, 1] by at most `QUANTUM_TOL` are clipped back; anything worse
    /// is rejected.
    pub fn new(matrix: ComplexMatrix) -> Result<Self, InstanceError> {
        let defect = matrix.hermitian_defect();
        if defect > HERMITIAN_TOL * matrix.frobenius_norm().max(1.0) {
            return Err(InstanceError::NotHermitian { defect });
        }
        clip_to_effect(matrix.hermitized(), QUANTUM_TOL)
    }

    fn from_valid(matrix: ComplexMatrix) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// Clips the spectrum to [0, 1] when it only leaks out by rounding noise;
/// matrices already inside the interval are stored untouched so exact
/// inputs stay exact.
fn clip_to_effect(matrix: ComplexMatrix, tol: f64) -> Result<QuantumEffect, InstanceError> {
    let eig = eig_hermitian(&matrix)?;
    clip_with_eig(matrix, &eig, tol)
}

fn clip_with_eig(
    matrix: ComplexMatrix,
    eig: &EigenDecomposition,
    tol: f64,
) -> Result<QuantumEffect, InstanceError> {
    let min = eig.min_eigenvalue();
    let max = eig.max_eigenvalue();
    if min < -tol || max > 1.0 + tol {
        return Err(InstanceError::NotEffect { min, max });
    }
    if min >= 0.0 && max <= 1.0 {
        return Ok(QuantumEffect::from_valid(matrix));
    }
    let clip = (-min).max(max - 1.0);
    if clip > CLIP_WARN {
        log::warn!("effect spectrum clipped by {clip:.3e}");
    }
    Ok(QuantumEffect::from_valid(
        eig.map_spectrum(|lambda| lambda.clamp(0.0, 1.0)),
    ))
}

/// Hermitian PSD matrix with unit trace.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self, InstanceError> {
        if !is_density(&matrix, QUANTUM_TOL) {
            let trace = matrix.trace().re;
            let min_eigenvalue = eig_hermitian(&matrix.hermitized())
                .map(|e| e.min_eigenvalue())
                .unwrap_or(f64::NAN);
            return Err(InstanceError::NotDensity {
                trace,
                min_eigenvalue,
            });
        }
        Ok(Self {
            matrix: matrix.hermitized(),
        })
    }

    /// The maximally mixed state I/d.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dim).scaled(1.0 / dim as f64),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// Quantum effects on a d-dimensional Hilbert space: ⊕ is the matrix sum
/// when it stays below the identity, and A ∘ B = √A · B · √A.
///
/// Every product is hermitized and spectrum-clipped so chained products
/// cannot drift out of the effect interval.
#[derive(Clone, Copy, Debug)]
pub struct QuantumSea {
    dim: usize,
    tol: f64,
}

impl QuantumSea {
    pub fn new(dim: usize) -> Result<Self, InstanceError> {
        if dim == 0 || dim > MAX_SIZE {
            return Err(InstanceError::BadSize(dim));
        }
        Ok(Self {
            dim,
            tol: QUANTUM_TOL,
        })
    }

    pub fn with_tolerance(dim: usize, tol: f64) -> Result<Self, InstanceError> {
        let mut sea = Self::new(dim)?;
        assert!(tol > 0.0, "tolerance must be positive");
        sea.tol = tol;
        Ok(sea)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn effect(&self, matrix: ComplexMatrix) -> Result<QuantumEffect, InstanceError> {
        if matrix.dim() != self.dim {
            return Err(InstanceError::BadLength {
                expected: self.dim,
                got: matrix.dim(),
            });
        }
        QuantumEffect::new(matrix)
    }

    fn check(&self, a: &QuantumEffect) {
        assert_eq!(a.dim(), self.dim, "effect has a different dimension");
    }

    fn sandwich(&self, sqrt_a: &ComplexMatrix, b: &QuantumEffect) -> QuantumEffect {
        let product = (&(sqrt_a * b.matrix()) * sqrt_a).hermitized();
        clip_to_effect(product, self.tol)
            .expect("sequential product of effects stays inside the effect interval")
    }
}

impl SequentialEffectAlgebra for QuantumSea {
    type Element = QuantumEffect;
    type State = DensityMatrix;

    fn zero(&self) -> QuantumEffect {
        QuantumEffect::from_valid(ComplexMatrix::zeros(self.dim))
    }

    fn one(&self) -> QuantumEffect {
        QuantumEffect::from_valid(ComplexMatrix::identity(self.dim))
    }

    fn try_oplus(&self, a: &QuantumEffect, b: &QuantumEffect) -> Option<QuantumEffect> {
        self.check(a);
        self.check(b);
        let sum = a.matrix() + b.matrix();
        let eig = eig_hermitian(&sum).expect("sum of stored effects is Hermitian");
        if eig.max_eigenvalue() > 1.0 + self.tol || eig.min_eigenvalue() < -self.tol {
            return None;
        }
        Some(clip_with_eig(sum, &eig, self.tol).expect("spectrum already checked"))
    }

    fn seq(&self, a: &QuantumEffect, b: &QuantumEffect) -> QuantumEffect {
        self.check(a);
        self.check(b);
        let sqrt_a = sqrt_psd(a.matrix()).expect("stored effects are PSD");
        self.sandwich(&sqrt_a, b)
    }

    fn seq_each(&self, a: &QuantumEffect, bs: &[QuantumEffect]) -> Vec<QuantumEffect> {
        self.check(a);
        let sqrt_a = sqrt_psd(a.matrix()).expect("stored effects are PSD");
        bs.iter()
            .map(|b| {
                self.check(b);
                self.sandwich(&sqrt_a, b)
            })
            .collect()
    }

    fn complement(&self, a: &QuantumEffect) -> QuantumEffect {
        self.check(a);
        QuantumEffect::from_valid(&ComplexMatrix::identity(self.dim) - a.matrix())
    }

    fn leq(&self, a: &QuantumEffect, b: &QuantumEffect) -> bool {
        self.check(a);
        self.check(b);
        let diff = b.matrix() - a.matrix();
        let eig = eig_hermitian(&diff).expect("difference of effects is Hermitian");
        eig.min_eigenvalue() >= -self.tol
    }

    fn is_sharp(&self, a: &QuantumEffect) -> bool {
        self.check(a);
        let squared = a.matrix() * a.matrix();
        (&squared - a.matrix()).frobenius_norm() <= SHARP_TOL
    }

    fn distance(&self, a: &QuantumEffect, b: &QuantumEffect) -> f64 {
        self.check(a);
        self.check(b);
        (a.matrix() - b.matrix()).frobenius_norm()
    }

    fn tolerance(&self) -> f64 {
        self.tol
    }

    fn eval(&self, state: &DensityMatrix, a: &QuantumEffect) -> f64 {
        self.check(a);
        assert_eq!(state.dim(), self.dim, "state has a different dimension");
        (state.matrix() * a.matrix()).trace().re.clamp(0.0, 1.0)
    }

    fn state_after(&self, state: &DensityMatrix, elements: &[QuantumEffect]) -> DensityMatrix {
        assert_eq!(state.dim(), self.dim, "state has a different dimension");
        let mut acc = ComplexMatrix::zeros(self.dim);
        for a in elements {
            self.check(a);
            let sqrt_a = sqrt_psd(a.matrix()).expect("stored effects are PSD");
            acc = &acc + &(&(&sqrt_a * state.matrix()) * &sqrt_a);
        }
        DensityMatrix {
            matrix: acc.hermitized(),
        }
    }
}

impl SharpMeet for QuantumSea {
    /// Meet of two projections; unsharp operands have no lattice meet here.
    fn try_meet(
        &self,
        a: &QuantumEffect,
        b: &QuantumEffect,
    ) -> Result<QuantumEffect, MeetError> {
        self.check(a);
        self.check(b);
        if !crate::spectral::is_projection(a.matrix(), PROJECTION_TOL)
            || !crate::spectral::is_projection(b.matrix(), PROJECTION_TOL)
        {
            return Err(MeetError::NotSharp);
        }
        let meet = meet_projections(a.matrix(), b.matrix())?;
        Ok(QuantumEffect::from_valid(meet))
    }
}
