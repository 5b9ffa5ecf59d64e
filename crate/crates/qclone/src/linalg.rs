//! Dense complex state vectors and unitary matrices for small systems.
//!
//! Basis convention: basis index `i` has bit `k` equal to the value of
//! qubit `k`, with qubit 0 the least significant bit. A two-qubit state is
//! therefore ordered `00, 01, 10, 11` when the bitstring is written
//! MSB-first. Tensor products put the left operand on the high-order bits.
//!
//! Everything here is immutable after construction and all operations are
//! pure functions, so values can be shared freely across threads.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense representations are capped at eight qubits; diagrams and matrices
/// grow as `2^n` and anything larger is a sign of a mistake, not a use case.
pub const MAX_QUBITS: usize = 8;

/// Largest supported Hilbert-space dimension, `2^MAX_QUBITS`.
pub const MAX_DIM: usize = 1 << MAX_QUBITS;

/// Tolerance for exact-algebra checks (normalization, unitarity).
pub const ALGEBRA_TOL: f64 = 1e-12;

fn qubit_count(dim: usize) -> Result<usize> {
    if dim < 2 || !dim.is_power_of_two() {
        return Err(Error::DimensionMismatch {
            expected: dim.max(2).next_power_of_two(),
            got: dim,
        });
    }
    if dim > MAX_DIM {
        return Err(Error::DimensionOverflow { dim, max: MAX_DIM });
    }
    Ok(dim.trailing_zeros() as usize)
}

/// Normalized amplitude vector over the `2^n` computational basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: DVector<Complex64>,
}

impl StateVector {
    /// Build from amplitudes; the squared norm must equal 1 within
    /// [`ALGEBRA_TOL`] and the length must be a power of two.
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        Self::renormalized(amps, ALGEBRA_TOL)
    }

    /// Like [`StateVector::new`] but accepts a squared-norm defect up to
    /// `tol` and rescales. Amplitudes already normalized within
    /// [`ALGEBRA_TOL`] are kept bit-for-bit.
    pub fn renormalized(amps: Vec<Complex64>, tol: f64) -> Result<Self> {
        let n_qubits = qubit_count(amps.len())?;
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NotNormalized { norm: f64::NAN });
        }
        let norm_sq: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        let amps = DVector::from_vec(amps);
        if (norm_sq - 1.0).abs() <= ALGEBRA_TOL {
            Ok(Self { n_qubits, amps })
        } else if (norm_sq - 1.0).abs() <= tol {
            let scale = Complex64::from(1.0 / norm_sq.sqrt());
            Ok(Self {
                n_qubits,
                amps: amps * scale,
            })
        } else {
            Err(Error::NotNormalized {
                norm: norm_sq.sqrt(),
            })
        }
    }

    /// Computational basis state `|index⟩` on `n_qubits` qubits.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::DimensionOverflow {
                dim: 1usize << n_qubits.min(63),
                max: MAX_DIM,
            });
        }
        let dim = 1 << n_qubits;
        if index >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: index,
            });
        }
        let mut amps = vec![Complex64::default(); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self {
            n_qubits,
            amps: DVector::from_vec(amps),
        })
    }

    /// Single-qubit state `a|0⟩ + b|1⟩`.
    pub fn qubit(a: Complex64, b: Complex64) -> Result<Self> {
        Self::new(vec![a, b])
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    /// Inner product `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(self.amps.dotc(&other.amps))
    }

    /// Kronecker product; `self` owns the high-order bits of the result.
    pub fn tensor(&self, rhs: &StateVector) -> Result<StateVector> {
        let dim = self.dim() * rhs.dim();
        if dim > MAX_DIM {
            return Err(Error::DimensionOverflow { dim, max: MAX_DIM });
        }
        Ok(StateVector {
            n_qubits: self.n_qubits + rhs.n_qubits,
            amps: self.amps.kronecker(&rhs.amps),
        })
    }

    /// Largest absolute amplitude difference to `other`.
    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        (&self.amps - &other.amps)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

/// Square complex matrix with `U†U = I` enforced within [`ALGEBRA_TOL`]
/// (Frobenius norm) at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix {
    dim: usize,
    m: DMatrix<Complex64>,
}

impl UnitaryMatrix {
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                got: m.ncols(),
            });
        }
        let dim = m.nrows();
        qubit_count(dim)?;
        let (ok, residual) = check_unitary(&m);
        if !ok {
            return Err(Error::NotUnitary { residual });
        }
        Ok(Self { dim, m })
    }

    /// Build from row-major entries.
    pub fn from_rows(dim: usize, entries: &[Complex64]) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        Self::new(DMatrix::from_row_slice(dim, dim, entries))
    }

    /// Real-entry convenience used by the gate catalog.
    pub fn from_real_rows(dim: usize, entries: &[f64]) -> Result<Self> {
        let entries: Vec<Complex64> = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_rows(dim, &entries)
    }

    pub fn identity(dim: usize) -> Result<Self> {
        qubit_count(dim)?;
        Ok(Self {
            dim,
            m: DMatrix::identity(dim, dim),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[(row, col)]
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.m
    }

    /// Kronecker product; `self` owns the high-order bits of the result.
    pub fn tensor(&self, rhs: &UnitaryMatrix) -> Result<UnitaryMatrix> {
        let dim = self.dim * rhs.dim;
        if dim > MAX_DIM {
            return Err(Error::DimensionOverflow { dim, max: MAX_DIM });
        }
        Ok(UnitaryMatrix {
            dim,
            m: self.m.kronecker(&rhs.m),
        })
    }

    /// Apply to a state: `U·psi`. Preserves the norm within [`ALGEBRA_TOL`].
    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        if self.dim != psi.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: psi.dim(),
            });
        }
        StateVector::new((&self.m * psi.amplitudes()).iter().copied().collect())
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &UnitaryMatrix) -> Result<UnitaryMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: rhs.dim,
            });
        }
        Ok(UnitaryMatrix {
            dim: self.dim,
            m: &self.m * &rhs.m,
        })
    }

    pub fn max_abs_diff(&self, other: &UnitaryMatrix) -> f64 {
        (&self.m - &other.m).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Product of a gate sequence, first listed gate applied first:
/// `compose([g0, g1, g2]) = g2 · g1 · g0`. An empty list has no dimension
/// to produce an identity for and is rejected; see
/// [`crate::gates::Circuit::unitary`] for the declared-dimension case.
pub fn compose(gates: &[UnitaryMatrix]) -> Result<UnitaryMatrix> {
    let first = gates.first().ok_or(Error::DimensionMismatch {
        expected: 1,
        got: 0,
    })?;
    let mut acc = first.clone();
    for g in &gates[1..] {
        acc = g.mul(&acc)?;
    }
    Ok(acc)
}

/// Unitarity check: true iff `‖M†M − I‖_F ≤` [`ALGEBRA_TOL`]; the residual
/// is returned either way. Non-square input reports an infinite residual.
pub fn check_unitary(m: &DMatrix<Complex64>) -> (bool, f64) {
    if m.nrows() != m.ncols() {
        return (false, f64::INFINITY);
    }
    let n = m.nrows();
    let residual = (m.adjoint() * m - DMatrix::<Complex64>::identity(n, n)).norm();
    (residual <= ALGEBRA_TOL, residual)
}
