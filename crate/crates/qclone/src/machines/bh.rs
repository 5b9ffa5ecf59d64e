//! The Buzek-Hillery copying machine.
//!
//! Three qubits: Bob carries the input (least significant bit), Eve holds
//! the copy (qubit 1) and qubit 2 is the ancilla. The machine itself is a
//! fixed permutation built from four c-not gates; all control sits in the
//! four-amplitude state `(α, β, γ, δ)` the two ancillary qubits are
//! prepared in. The input enters as the tensor product of that control
//! state with the qubit to copy.

use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::gates::{Circuit, GateSpec};
use crate::linalg::{StateVector, UnitaryMatrix, ALGEBRA_TOL};

/// Bob's qubit index (the input carrier).
pub const BH_BOB_QUBIT: usize = 0;
/// Eve's qubit index.
pub const BH_EVE_QUBIT: usize = 1;
/// Ancilla qubit index.
pub const BH_ANCILLA_QUBIT: usize = 2;

/// Lower end of the symmetric-case interval for α, `1/√2`.
pub const SYMMETRIC_ALPHA_MIN: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Upper end of the symmetric-case interval for α, `√(2/3)`.
pub fn symmetric_alpha_max() -> f64 {
    (2.0f64 / 3.0).sqrt()
}

/// Slack accepted (and clamped away) at solver domain boundaries, so that
/// values quoted to a dozen decimal digits still count as the endpoints.
const BOUNDARY_SLACK: f64 = 1e-7;

/// Real control-state amplitudes `(α, β, γ, δ)` with `Σ² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlState {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
}

impl ControlState {
    pub fn new(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Result<Self> {
        let norm_sq = alpha * alpha + beta * beta + gamma * gamma + delta * delta;
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > ALGEBRA_TOL {
            return Err(Error::NotNormalized {
                norm: norm_sq.sqrt(),
            });
        }
        Ok(Self {
            alpha,
            beta,
            gamma,
            delta,
        })
    }

    pub fn components(&self) -> [f64; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }

    /// The control state as a two-qubit state vector.
    pub fn to_state(&self) -> StateVector {
        StateVector::new(
            self.components()
                .iter()
                .map(|&x| Complex64::new(x, 0.0))
                .collect(),
        )
        .expect("normalized by construction")
    }
}

/// Bloch shrink factors of the two copies: `S_B = 2αδ`, `S_E = 2αγ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingFactors {
    pub s_bob: f64,
    pub s_eve: f64,
}

/// The fixed 8×8 permutation matrix of the machine.
pub fn bh_unitary() -> UnitaryMatrix {
    // One 1 per row; row i takes its amplitude from column perm[i].
    let perm = [0usize, 7, 5, 2, 3, 4, 6, 1];
    let mut rows = [[0.0f64; 8]; 8];
    for (i, &j) in perm.iter().enumerate() {
        rows[i][j] = 1.0;
    }
    let flat: Vec<f64> = rows.iter().flatten().copied().collect();
    UnitaryMatrix::from_real_rows(8, &flat).expect("permutation")
}

/// The same machine as four c-not gates: the input qubit first fans out
/// onto Eve and the ancilla, then both act back on the input.
pub fn bh_circuit() -> Circuit {
    Circuit::from_gates(
        3,
        vec![
            GateSpec::cnot_r(BH_BOB_QUBIT, BH_EVE_QUBIT),
            GateSpec::cnot_r(BH_BOB_QUBIT, BH_ANCILLA_QUBIT),
            GateSpec::cnot(BH_EVE_QUBIT, BH_BOB_QUBIT),
            GateSpec::cnot(BH_ANCILLA_QUBIT, BH_BOB_QUBIT),
        ],
    )
    .expect("fixed three-qubit circuit")
}

/// Output of one run: the full three-qubit state and the three
/// single-qubit reduced matrices.
#[derive(Debug, Clone)]
pub struct BhRun {
    pub psi_out: StateVector,
    pub rho_bob: DensityMatrix,
    pub rho_eve: DensityMatrix,
    pub rho_anc: DensityMatrix,
}

/// Run the machine: `Ψ_in = control ⊗ (a|0⟩ + b|1⟩)`, `Ψ_out = U·Ψ_in`,
/// then trace down to each party.
pub fn bh_run(control: &ControlState, a: Complex64, b: Complex64) -> Result<BhRun> {
    bh_run_state(&control.to_state(), a, b)
}

/// [`bh_run`] for an arbitrary (possibly complex) two-qubit control state.
pub fn bh_run_state(control: &StateVector, a: Complex64, b: Complex64) -> Result<BhRun> {
    if control.n_qubits() != 2 {
        return Err(Error::QubitCount {
            expected: 2,
            got: control.n_qubits(),
        });
    }
    let input = StateVector::qubit(a, b)?;
    let psi_in = control.tensor(&input)?;
    let psi_out = bh_unitary().apply(&psi_in)?;
    let rho = DensityMatrix::from_state(&psi_out);
    let rho_bob = rho.partial_trace(&[BH_EVE_QUBIT, BH_ANCILLA_QUBIT])?;
    let rho_eve = rho.partial_trace(&[BH_BOB_QUBIT, BH_ANCILLA_QUBIT])?;
    let rho_anc = rho.partial_trace(&[BH_BOB_QUBIT, BH_EVE_QUBIT])?;
    Ok(BhRun {
        psi_out,
        rho_bob,
        rho_eve,
        rho_anc,
    })
}

/// Solve the isotropy conditions of the symmetric case for a free α in
/// `[1/√2, √(2/3)]`: `β = 0`, `γ,δ = α/2 ∓ √(1/2 − 3α²/4)`. Both copies
/// then shrink isotropically by `S_B = 2αδ` and `S_E = 2αγ`.
pub fn bh_symmetric_params(alpha: f64) -> Result<(ControlState, ScalingFactors)> {
    let lo = SYMMETRIC_ALPHA_MIN;
    let hi = symmetric_alpha_max();
    if !alpha.is_finite() || alpha < lo - BOUNDARY_SLACK || alpha > hi + BOUNDARY_SLACK {
        return Err(Error::Domain {
            param: "alpha",
            value: alpha,
            lo,
            hi,
        });
    }
    let alpha = alpha.clamp(lo, hi);
    // Factored form of 1/2 − 3α²/4: exact at the upper endpoint, where the
    // direct subtraction loses eight digits to cancellation.
    let root = (0.75 * (hi - alpha) * (hi + alpha)).max(0.0).sqrt();
    let gamma = alpha / 2.0 - root;
    let delta = alpha / 2.0 + root;
    let control = ControlState::new(alpha, 0.0, gamma, delta)?;
    // Round-off at the endpoints can land a hair outside [0, 1].
    let factors = ScalingFactors {
        s_bob: (2.0 * alpha * delta).clamp(0.0, 1.0),
        s_eve: (2.0 * alpha * gamma).clamp(0.0, 1.0),
    };
    Ok((control, factors))
}

/// Optimal equatorial (four-state protocol) parameters for a chosen Eve
/// shrink factor: `α = 1/√2`, `β = 0`, `γ = S_E/√2`, `δ = √(1/2 − γ²)`.
/// Returns the control state and the resulting `S_B = √(1 − S_E²)`.
pub fn bh_equatorial_params(s_eve: f64) -> Result<(ControlState, f64)> {
    if !s_eve.is_finite() || !(-BOUNDARY_SLACK..=1.0 + BOUNDARY_SLACK).contains(&s_eve) {
        return Err(Error::Domain {
            param: "s_eve",
            value: s_eve,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let s_eve = s_eve.clamp(0.0, 1.0);
    let alpha = SYMMETRIC_ALPHA_MIN;
    let gamma = s_eve * SYMMETRIC_ALPHA_MIN;
    let delta = (0.5 - gamma * gamma).max(0.0).sqrt();
    let control = ControlState::new(alpha, 0.0, gamma, delta)?;
    let s_bob = 2.0 * alpha * delta;
    Ok((control, s_bob))
}

/// One row of the symmetric-case sweep. Fidelities are `(1 + S)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricSweepRow {
    pub alpha: f64,
    pub s_bob: f64,
    pub s_eve: f64,
    pub f_bob: f64,
    pub f_eve: f64,
}

/// Uniform α grid over `[1/√2, √(2/3)]`, endpoints included.
pub fn sweep_symmetric(n_steps: usize) -> Result<Vec<SymmetricSweepRow>> {
    if n_steps < 2 {
        return Err(Error::Domain {
            param: "steps",
            value: n_steps as f64,
            lo: 2.0,
            hi: f64::INFINITY,
        });
    }
    let lo = SYMMETRIC_ALPHA_MIN;
    let hi = symmetric_alpha_max();
    (0..n_steps)
        .map(|k| {
            let alpha = if k == n_steps - 1 {
                hi
            } else {
                lo + (hi - lo) * k as f64 / (n_steps - 1) as f64
            };
            let (_, factors) = bh_symmetric_params(alpha)?;
            Ok(SymmetricSweepRow {
                alpha,
                s_bob: factors.s_bob,
                s_eve: factors.s_eve,
                f_bob: (1.0 + factors.s_bob) / 2.0,
                f_eve: (1.0 + factors.s_eve) / 2.0,
            })
        })
        .collect()
}

/// One row of the equatorial-case sweep (`S_B` against `S_E`, α fixed).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquatorialSweepRow {
    pub s_eve: f64,
    pub s_bob: f64,
    pub alpha: f64,
}

/// Uniform `S_E` grid over `[0, 1]`, endpoints included.
pub fn sweep_equatorial(n_steps: usize) -> Result<Vec<EquatorialSweepRow>> {
    if n_steps < 2 {
        return Err(Error::Domain {
            param: "steps",
            value: n_steps as f64,
            lo: 2.0,
            hi: f64::INFINITY,
        });
    }
    (0..n_steps)
        .map(|k| {
            let s_eve = if k == n_steps - 1 {
                1.0
            } else {
                k as f64 / (n_steps - 1) as f64
            };
            let (_, s_bob) = bh_equatorial_params(s_eve)?;
            Ok(EquatorialSweepRow {
                s_eve,
                s_bob,
                alpha: SYMMETRIC_ALPHA_MIN,
            })
        })
        .collect()
}
