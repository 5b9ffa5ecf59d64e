//! Density matrices, partial trace, Bloch coordinates and fidelity.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{StateVector, ALGEBRA_TOL, MAX_DIM};

/// Eigenvalue floor for the positive-semidefiniteness check; tolerates
/// round-off on constructed matrices.
pub const PSD_TOL: f64 = 1e-10;

/// Default tolerance for the two-qubit factorizability determinant.
pub const PRODUCT_TOL: f64 = 1e-10;

/// Hermitian, unit-trace, positive-semidefinite matrix over `2^n` states.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    m: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates Hermiticity and unit trace within 1e-12 and eigenvalues
    /// down to `-`[`PSD_TOL`].
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::NotDensity {
                reason: format!("{}x{} is not square", m.nrows(), m.ncols()),
            });
        }
        let dim = m.nrows();
        if dim < 2 || !dim.is_power_of_two() || dim > MAX_DIM {
            return Err(Error::NotDensity {
                reason: format!("dimension {dim} is not a power of two in [2, {MAX_DIM}]"),
            });
        }
        let herm_defect = (&m - m.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if herm_defect > ALGEBRA_TOL {
            return Err(Error::NotDensity {
                reason: format!("not Hermitian (defect {herm_defect:.3e})"),
            });
        }
        let trace = m.trace();
        if (trace.re - 1.0).abs() > ALGEBRA_TOL || trace.im.abs() > ALGEBRA_TOL {
            return Err(Error::NotDensity {
                reason: format!("trace {} != 1", trace.re),
            });
        }
        let min_eig = m
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        if min_eig < -PSD_TOL {
            return Err(Error::NotDensity {
                reason: format!("negative eigenvalue {min_eig:.3e}"),
            });
        }
        Ok(Self {
            n_qubits: dim.trailing_zeros() as usize,
            m,
        })
    }

    /// Pure-state density matrix `ρ = |ψ⟩⟨ψ|`.
    pub fn from_state(psi: &StateVector) -> Self {
        let dim = psi.dim();
        let m = DMatrix::from_fn(dim, dim, |i, j| {
            psi.amplitude(i) * psi.amplitude(j).conj()
        });
        Self {
            n_qubits: psi.n_qubits(),
            m,
        }
    }

    /// Single-qubit state from Bloch coordinates,
    /// `ρ = ½ [[1+Z, X−iY], [X+iY, 1−Z]]`.
    pub fn from_bloch(b: &BlochVector) -> Self {
        let m = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new((1.0 + b.z) / 2.0, 0.0),
                Complex64::new(b.x / 2.0, -b.y / 2.0),
                Complex64::new(b.x / 2.0, b.y / 2.0),
                Complex64::new((1.0 - b.z) / 2.0, 0.0),
            ],
        );
        Self { n_qubits: 1, m }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[(row, col)]
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.m
    }

    pub fn trace(&self) -> Complex64 {
        self.m.trace()
    }

    pub fn max_abs_diff(&self, other: &DensityMatrix) -> f64 {
        (&self.m - &other.m).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Reduced state after tracing out the qubits in `traced`; the
    /// remaining qubits keep their ascending original order.
    pub fn partial_trace(&self, traced: &[usize]) -> Result<DensityMatrix> {
        let n = self.n_qubits;
        let mut seen = vec![false; n];
        for &q in traced {
            if q >= n {
                return Err(Error::InvalidTrace {
                    reason: format!("qubit {q} out of range for {n} qubit(s)"),
                });
            }
            if seen[q] {
                return Err(Error::InvalidTrace {
                    reason: format!("qubit {q} listed twice"),
                });
            }
            seen[q] = true;
        }
        if traced.is_empty() {
            return Err(Error::InvalidTrace {
                reason: "no qubits to trace".to_string(),
            });
        }
        if traced.len() == n {
            return Err(Error::InvalidTrace {
                reason: "tracing all qubits leaves a scalar".to_string(),
            });
        }
        let kept: Vec<usize> = (0..n).filter(|q| !seen[*q]).collect();
        let traced: Vec<usize> = (0..n).filter(|q| seen[*q]).collect();
        let kd = 1usize << kept.len();
        let td = 1usize << traced.len();
        let spread = |value: usize, positions: &[usize]| -> usize {
            positions
                .iter()
                .enumerate()
                .map(|(bit, &q)| ((value >> bit) & 1) << q)
                .sum()
        };
        let reduced = DMatrix::from_fn(kd, kd, |r, c| {
            let row_base = spread(r, &kept);
            let col_base = spread(c, &kept);
            (0..td)
                .map(|t| {
                    let offs = spread(t, &traced);
                    self.m[(row_base | offs, col_base | offs)]
                })
                .sum()
        });
        Ok(DensityMatrix {
            n_qubits: kept.len(),
            m: reduced,
        })
    }

    /// Bloch coordinates of a single-qubit state:
    /// `X = 2 Re ρ₁₀`, `Y = 2 Im ρ₁₀`, `Z = ρ₀₀ − ρ₁₁`.
    pub fn bloch(&self) -> Result<BlochVector> {
        if self.n_qubits != 1 {
            return Err(Error::QubitCount {
                expected: 1,
                got: self.n_qubits,
            });
        }
        BlochVector::new(
            2.0 * self.m[(1, 0)].re,
            2.0 * self.m[(1, 0)].im,
            (self.m[(0, 0)] - self.m[(1, 1)]).re,
        )
    }

    /// Fidelity against a pure reference state, `F = |⟨ψ|ρ|ψ⟩|`.
    pub fn fidelity_pure(&self, psi: &StateVector) -> Result<f64> {
        if psi.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: psi.dim(),
            });
        }
        let rho_psi = &self.m * psi.amplitudes();
        Ok(psi.amplitudes().dotc(&rho_psi).norm())
    }
}

/// Real Bloch-sphere coordinates of a single-qubit density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    /// Components must be finite and the vector must fit in the unit ball
    /// within round-off.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let v = Self { x, y, z };
        let r2 = v.norm_sqr();
        if !r2.is_finite() || r2 > 1.0 + PSD_TOL {
            return Err(Error::NotDensity {
                reason: format!("Bloch vector norm {} exceeds 1", r2.sqrt()),
            });
        }
        Ok(v)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }
}

/// Two-qubit factorizability test: `|x₀₀x₁₁ − x₀₁x₁₀| ≤ tol`. Use
/// [`PRODUCT_TOL`] unless a caller has a reason for a different threshold.
/// The state is a product of two single-qubit states exactly when the
/// determinant of its 2×2 amplitude table vanishes.
pub fn is_product_2q(psi: &StateVector, tol: f64) -> Result<bool> {
    if psi.n_qubits() != 2 {
        return Err(Error::QubitCount {
            expected: 2,
            got: psi.n_qubits(),
        });
    }
    let det = psi.amplitude(0) * psi.amplitude(3) - psi.amplitude(1) * psi.amplitude(2);
    Ok(det.norm() <= tol)
}
