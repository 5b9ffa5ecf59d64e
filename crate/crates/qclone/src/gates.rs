//! Gate specifications, the elementary two-qubit gate catalog, and circuits.
//!
//! The controlled-not family follows the naming used for two-qubit systems:
//! `cnot` has its control on the most significant bit, the `R` variants put
//! the control on the least significant bit, and the `bar` variants trigger
//! on a control value of 0 instead of 1. All of them generalize to explicit
//! `(control, target)` indices on larger registers.
//!
//! `crot` is a rotation of the target qubit by half the given angle,
//! `[[cos θ/2, sin θ/2], [-sin θ/2, cos θ/2]]` (cosine on the diagonal,
//! +sine in the upper-right block), optionally restricted to the subspace
//! where a control qubit is 1.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{check_unitary, StateVector, UnitaryMatrix, MAX_QUBITS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateKind {
    Not,
    Swap,
    Cnot,
    CnotBar,
    CnotR,
    CnotRBar,
    U1q,
    Crot,
}

impl GateKind {
    pub fn name(&self) -> &'static str {
        match self {
            GateKind::Not => "not",
            GateKind::Swap => "swap",
            GateKind::Cnot => "cnot",
            GateKind::CnotBar => "cnotbar",
            GateKind::CnotR => "cnotr",
            GateKind::CnotRBar => "cnotrbar",
            GateKind::U1q => "u1q",
            GateKind::Crot => "crot",
        }
    }
}

/// One gate in a circuit. `matrix2` is row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GateSpec {
    pub kind: GateKind,
    pub target: usize,
    pub control: Option<usize>,
    pub angle: Option<f64>,
    pub matrix2: Option<[[Complex64; 2]; 2]>,
}

impl GateSpec {
    fn bare(kind: GateKind, target: usize) -> Self {
        Self {
            kind,
            target,
            control: None,
            angle: None,
            matrix2: None,
        }
    }

    pub fn not(target: usize) -> Self {
        Self::bare(GateKind::Not, target)
    }

    /// Swap gate on an arbitrary qubit pair (no adjacency restriction).
    pub fn swap(a: usize, b: usize) -> Self {
        Self {
            control: Some(a),
            ..Self::bare(GateKind::Swap, b)
        }
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Self {
            control: Some(control),
            ..Self::bare(GateKind::Cnot, target)
        }
    }

    pub fn cnot_bar(control: usize, target: usize) -> Self {
        Self {
            control: Some(control),
            ..Self::bare(GateKind::CnotBar, target)
        }
    }

    pub fn cnot_r(control: usize, target: usize) -> Self {
        Self {
            control: Some(control),
            ..Self::bare(GateKind::CnotR, target)
        }
    }

    pub fn cnot_r_bar(control: usize, target: usize) -> Self {
        Self {
            control: Some(control),
            ..Self::bare(GateKind::CnotRBar, target)
        }
    }

    pub fn u1q(target: usize, matrix2: [[Complex64; 2]; 2]) -> Self {
        Self {
            matrix2: Some(matrix2),
            ..Self::bare(GateKind::U1q, target)
        }
    }

    /// Uncontrolled rotation of `target` by `angle/2`.
    pub fn crot(target: usize, angle: f64) -> Self {
        Self {
            angle: Some(angle),
            ..Self::bare(GateKind::Crot, target)
        }
    }

    /// Rotation of `target` by `angle/2`, applied only where `control` is 1.
    pub fn crot_controlled(control: usize, target: usize, angle: f64) -> Self {
        Self {
            control: Some(control),
            angle: Some(angle),
            ..Self::bare(GateKind::Crot, target)
        }
    }

    /// Check index bounds and per-kind field requirements.
    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        let fail = |reason: String| Err(Error::InvalidGate { reason });
        if self.target >= n_qubits {
            return fail(format!(
                "target {} out of range for {} qubit(s)",
                self.target, n_qubits
            ));
        }
        if let Some(c) = self.control {
            if c >= n_qubits {
                return fail(format!(
                    "control {} out of range for {} qubit(s)",
                    c, n_qubits
                ));
            }
            if c == self.target {
                return fail(format!("control and target both {}", c));
            }
        }
        let needs_control = matches!(
            self.kind,
            GateKind::Swap | GateKind::Cnot | GateKind::CnotBar | GateKind::CnotR | GateKind::CnotRBar
        );
        if needs_control && self.control.is_none() {
            return fail(format!("{} requires two qubit indices", self.kind.name()));
        }
        if matches!(self.kind, GateKind::Not | GateKind::U1q) && self.control.is_some() {
            return fail(format!("{} takes a single qubit index", self.kind.name()));
        }
        if self.kind == GateKind::Crot && self.angle.is_none() {
            return fail("crot requires theta".to_string());
        }
        if self.kind != GateKind::Crot && self.angle.is_some() {
            return fail(format!("{} does not take an angle", self.kind.name()));
        }
        if self.kind == GateKind::U1q {
            match self.matrix2 {
                None => return fail("u1q requires a 2x2 matrix".to_string()),
                Some(m) => {
                    let dm = DMatrix::from_row_slice(2, 2, &[m[0][0], m[0][1], m[1][0], m[1][1]]);
                    let (ok, residual) = check_unitary(&dm);
                    if !ok {
                        return fail(format!("u1q matrix is not unitary (residual {residual:.3e})"));
                    }
                }
            }
        } else if self.matrix2.is_some() {
            return fail(format!("{} does not take a matrix", self.kind.name()));
        }
        Ok(())
    }

    /// Short label used by diagram columns, e.g. `cnot(1,0)`.
    pub fn label(&self) -> String {
        match (self.kind, self.control) {
            (GateKind::Swap, Some(a)) => format!("swap({},{})", a, self.target),
            (_, Some(c)) => format!("{}({},{})", self.kind.name(), c, self.target),
            (_, None) => format!("{}({})", self.kind.name(), self.target),
        }
    }
}

/// Full `2^n × 2^n` matrix of a gate on an `n_qubits` register.
pub fn build_gate_matrix(spec: &GateSpec, n_qubits: usize) -> Result<UnitaryMatrix> {
    if n_qubits == 0 || n_qubits > MAX_QUBITS {
        return Err(Error::DimensionOverflow {
            dim: 1usize << n_qubits.min(63),
            max: 1 << MAX_QUBITS,
        });
    }
    spec.validate(n_qubits)?;
    let dim = 1usize << n_qubits;
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    let one = Complex64::new(1.0, 0.0);
    let tbit = 1usize << spec.target;

    match spec.kind {
        GateKind::Not => {
            for i in 0..dim {
                m[(i ^ tbit, i)] = one;
            }
        }
        GateKind::Swap => {
            let abit = 1usize << spec.control.expect("validated");
            for i in 0..dim {
                let a = (i & abit != 0) as usize;
                let t = (i & tbit != 0) as usize;
                let j = if a == t {
                    i
                } else {
                    i ^ abit ^ tbit
                };
                m[(j, i)] = one;
            }
        }
        GateKind::Cnot | GateKind::CnotBar | GateKind::CnotR | GateKind::CnotRBar => {
            let cbit = 1usize << spec.control.expect("validated");
            let fire_on = matches!(spec.kind, GateKind::Cnot | GateKind::CnotR);
            for i in 0..dim {
                let j = if (i & cbit != 0) == fire_on { i ^ tbit } else { i };
                m[(j, i)] = one;
            }
        }
        GateKind::U1q => {
            let u = spec.matrix2.expect("validated");
            for i in 0..dim {
                if i & tbit == 0 {
                    let j = i | tbit;
                    m[(i, i)] = u[0][0];
                    m[(i, j)] = u[0][1];
                    m[(j, i)] = u[1][0];
                    m[(j, j)] = u[1][1];
                }
            }
        }
        GateKind::Crot => {
            let half = spec.angle.expect("validated") / 2.0;
            let (s, c) = half.sin_cos();
            let (cos, sin) = (Complex64::new(c, 0.0), Complex64::new(s, 0.0));
            for i in 0..dim {
                let active = match spec.control {
                    Some(ctrl) => i & (1 << ctrl) != 0,
                    None => true,
                };
                if !active {
                    if m[(i, i)] == Complex64::default() {
                        m[(i, i)] = one;
                    }
                    continue;
                }
                if i & tbit == 0 {
                    let j = i | tbit;
                    m[(i, i)] = cos;
                    m[(i, j)] = sin;
                    m[(j, i)] = -sin;
                    m[(j, j)] = cos;
                }
            }
        }
    }
    UnitaryMatrix::new(m)
}

/// Ordered gate list on a fixed register, read first-to-last in application
/// order (left to right in a drawn circuit).
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<GateSpec>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::DimensionOverflow {
                dim: 1usize << n_qubits.min(63),
                max: 1 << MAX_QUBITS,
            });
        }
        Ok(Self {
            n_qubits,
            gates: Vec::new(),
        })
    }

    pub fn from_gates(n_qubits: usize, gates: Vec<GateSpec>) -> Result<Self> {
        let mut circuit = Self::new(n_qubits)?;
        for gate in gates {
            circuit.push(gate)?;
        }
        Ok(circuit)
    }

    pub fn push(&mut self, gate: GateSpec) -> Result<()> {
        gate.validate(self.n_qubits)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn gates(&self) -> &[GateSpec] {
        &self.gates
    }

    /// Composed matrix of the whole circuit; identity when empty.
    pub fn unitary(&self) -> Result<UnitaryMatrix> {
        let mut acc = UnitaryMatrix::identity(self.dim())?;
        for gate in &self.gates {
            acc = build_gate_matrix(gate, self.n_qubits)?.mul(&acc)?;
        }
        Ok(acc)
    }

    /// Apply all gates to `initial`, first gate first.
    pub fn simulate(&self, initial: &StateVector) -> Result<StateVector> {
        if initial.n_qubits() != self.n_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: initial.dim(),
            });
        }
        let mut state = initial.clone();
        for gate in &self.gates {
            state = build_gate_matrix(gate, self.n_qubits)?.apply(&state)?;
        }
        Ok(state)
    }
}

/// The elementary two-qubit permutation gates with their canonical
/// control/target assignment (`cnot` controls on the MSB, the `R` variants
/// on the LSB), as listed in the gate catalog.
pub fn catalog_permutation_gates() -> Vec<(&'static str, GateSpec)> {
    vec![
        ("not on lsb", GateSpec::not(0)),
        ("not on msb", GateSpec::not(1)),
        ("swap", GateSpec::swap(0, 1)),
        ("c-not", GateSpec::cnot(1, 0)),
        ("c-not-bar", GateSpec::cnot_bar(1, 0)),
        ("c-not-r", GateSpec::cnot_r(0, 1)),
        ("c-not-r-bar", GateSpec::cnot_r_bar(0, 1)),
    ]
}
