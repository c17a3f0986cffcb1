use std::fmt;
use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::SpectralError;

/// Dense square complex matrix, row-major at the API boundary.
///
/// Construction rejects non-finite entries, so every `ComplexMatrix` in
/// circulation is finite by invariant.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    inner: DMatrix<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            inner: DMatrix::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            inner: DMatrix::identity(dim, dim),
        }
    }

    /// Builds a matrix from row-major nested vectors.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self, SpectralError> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(SpectralError::NotSquare);
        }
        let data: Vec<Complex64> = rows.iter().flatten().copied().collect();
        if !data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(SpectralError::NonFinite);
        }
        Ok(Self {
            inner: DMatrix::from_row_slice(dim, dim, &data),
        })
    }

    /// Fills entry (i, j) from `f`, row by row.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        let m = Self {
            inner: DMatrix::from_row_slice(dim, dim, &data),
        };
        debug_assert!(m.is_finite());
        m
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        Self::from_fn(diag.len(), |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                Complex64::ZERO
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.inner[(row, col)]
    }

    /// Row-major copy of the entries, for serialization.
    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.inner[(i, j)]).collect())
            .collect()
    }

    pub fn adjoint(&self) -> Self {
        Self {
            inner: self.inner.adjoint(),
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            inner: &self.inner * Complex64::new(factor, 0.0),
        }
    }

    pub fn trace(&self) -> Complex64 {
        self.inner.trace()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.inner.norm()
    }

    /// ‖M − M†‖_F, zero for exactly Hermitian storage.
    pub fn hermitian_defect(&self) -> f64 {
        (&self.inner - self.inner.adjoint()).norm()
    }

    /// (M + M†)/2. Idempotent, and the result has zero Hermitian defect
    /// because conjugation distributes exactly over the averaged entries.
    pub fn hermitized(&self) -> Self {
        Self {
            inner: (&self.inner + self.inner.adjoint()) * Complex64::new(0.5, 0.0),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.inner.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub(crate) fn as_dmatrix(&self) -> &DMatrix<Complex64> {
        &self.inner
    }

    pub(crate) fn from_dmatrix(inner: DMatrix<Complex64>) -> Self {
        debug_assert_eq!(inner.nrows(), inner.ncols());
        Self { inner }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix(dim={})", self.dim())?;
        for i in 0..self.dim() {
            write!(f, "  [")?;
            for j in 0..self.dim() {
                let z = self.inner[(i, j)];
                write!(f, " {:+.4}{:+.4}i", z.re, z.im)?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

fn assert_same_dim(a: &ComplexMatrix, b: &ComplexMatrix) {
    assert_eq!(
        a.dim(),
        b.dim(),
        "matrix dimension mismatch: {} vs {}",
        a.dim(),
        b.dim()
    );
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_same_dim(self, rhs);
        ComplexMatrix {
            inner: &self.inner + &rhs.inner,
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_same_dim(self, rhs);
        ComplexMatrix {
            inner: &self.inner - &rhs.inner,
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_same_dim(self, rhs);
        ComplexMatrix {
            inner: &self.inner * &rhs.inner,
        }
    }
}
