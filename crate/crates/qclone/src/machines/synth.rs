//! Synthesis of the Buzek-Hillery control state from three angles.
//!
//! The target `(α, β, γ, δ) = (C₁C₂, C₁S₂, S₁C₃, S₁S₃)` is produced by two
//! operators applied to |00⟩: `U₁` rotates the most significant bit by θ₁
//! and `U₂` rotates the least significant bit by θ₂ or θ₃ depending on the
//! most significant bit. With `β = 0` the controlled-θ₂ gate is absent.

use crate::error::Result;
use crate::gates::{Circuit, GateSpec};
use crate::linalg::UnitaryMatrix;
use crate::machines::bh::ControlState;

/// The three degrees of freedom of the control state, in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthesisAngles {
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
}

impl SynthesisAngles {
    pub fn new(theta1: f64, theta2: f64, theta3: f64) -> Self {
        Self {
            theta1,
            theta2,
            theta3,
        }
    }
}

/// Closed form `(C₁C₂, C₁S₂, S₁C₃, S₁S₃)`; normalized by the trig identity.
pub fn synth_control(angles: &SynthesisAngles) -> ControlState {
    let (s1, c1) = angles.theta1.sin_cos();
    let (s2, c2) = angles.theta2.sin_cos();
    let (s3, c3) = angles.theta3.sin_cos();
    ControlState::new(c1 * c2, c1 * s2, s1 * c3, s1 * s3)
        .expect("trigonometric parameterization is normalized")
}

/// The two operator matrices `(U₁, U₂)` of the synthesis circuit.
pub fn synth_operators(angles: &SynthesisAngles) -> (UnitaryMatrix, UnitaryMatrix) {
    let (s1, c1) = angles.theta1.sin_cos();
    let (s2, c2) = angles.theta2.sin_cos();
    let (s3, c3) = angles.theta3.sin_cos();
    let u1 = UnitaryMatrix::from_real_rows(
        4,
        &[
            c1, 0.0, -s1, 0.0, //
            0.0, c1, 0.0, -s1, //
            s1, 0.0, c1, 0.0, //
            0.0, s1, 0.0, c1,
        ],
    )
    .expect("rotation");
    let u2 = UnitaryMatrix::from_real_rows(
        4,
        &[
            c2, -s2, 0.0, 0.0, //
            s2, c2, 0.0, 0.0, //
            0.0, 0.0, c3, -s3, //
            0.0, 0.0, s3, c3,
        ],
    )
    .expect("block rotation");
    (u1, u2)
}

/// Invert the parameterization. Branches are fixed by convention:
/// `θ₁ = atan2(√(γ²+δ²), √(α²+β²))` lies in `[0, π/2]`, `θ₂ = atan2(β, α)`
/// and `θ₃ = atan2(δ, γ)`, with degenerate corners collapsing to 0.
pub fn solve_synthesis(control: &ControlState) -> SynthesisAngles {
    let [alpha, beta, gamma, delta] = control.components();
    let top = (alpha * alpha + beta * beta).sqrt();
    let bottom = (gamma * gamma + delta * delta).sqrt();
    SynthesisAngles {
        theta1: bottom.atan2(top),
        theta2: beta.atan2(alpha),
        theta3: delta.atan2(gamma),
    }
}

/// Gate-level synthesis circuit on two qubits, initial state |00⟩.
///
/// `crot` rotates by half its angle with the opposite sine sign, so each
/// θ gate becomes `crot` with angle `−2θ`; the θ₂ gate fires on a control
/// value of 0 and is wrapped in a `not` pair. Zero-angle gates are omitted,
/// so a `β = 0` control state needs only the θ₁ and θ₃ gates.
pub fn synth_circuit(angles: &SynthesisAngles) -> Result<Circuit> {
    let mut gates = Vec::new();
    if angles.theta1 != 0.0 {
        gates.push(GateSpec::crot(1, -2.0 * angles.theta1));
    }
    if angles.theta2 != 0.0 {
        gates.push(GateSpec::not(1));
        gates.push(GateSpec::crot_controlled(1, 0, -2.0 * angles.theta2));
        gates.push(GateSpec::not(1));
    }
    if angles.theta3 != 0.0 {
        gates.push(GateSpec::crot_controlled(1, 0, -2.0 * angles.theta3));
    }
    Circuit::from_gates(2, gates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::StateVector;
    use approx::assert_abs_diff_eq;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn assert_control_close(got: &ControlState, want: &ControlState, tol: f64) {
        for (g, w) in got.components().iter().zip(want.components()) {
            assert_abs_diff_eq!(*g, w, epsilon = tol);
        }
    }

    #[test]
    fn zero_angles_give_the_trivial_control() {
        let control = synth_control(&SynthesisAngles::new(0.0, 0.0, 0.0));
        assert_eq!(control.components(), [1.0, 0.0, 0.0, 0.0]);
        assert_eq!(
            solve_synthesis(&control),
            SynthesisAngles::new(0.0, 0.0, 0.0)
        );
        // No gates survive: the synthesis circuit is the identity.
        assert!(synth_circuit(&SynthesisAngles::new(0.0, 0.0, 0.0))
            .unwrap()
            .gates()
            .is_empty());
    }

    #[test]
    fn closed_form_matches_operator_product() {
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..50 {
            let angles = SynthesisAngles::new(
                rng.random::<f64>() * 3.0 - 1.5,
                rng.random::<f64>() * 3.0 - 1.5,
                rng.random::<f64>() * 3.0 - 1.5,
            );
            let (u1, u2) = synth_operators(&angles);
            let from_matrices = u2
                .mul(&u1)
                .unwrap()
                .apply(&StateVector::basis(2, 0).unwrap())
                .unwrap();
            let closed = synth_control(&angles).to_state();
            assert!(from_matrices.max_abs_diff(&closed) <= 1e-12);
        }
    }

    #[test]
    fn circuit_composes_to_the_operators() {
        let angles = SynthesisAngles::new(0.8, 0.5, 1.1);
        let (u1, u2) = synth_operators(&angles);
        let circuit = synth_circuit(&angles).unwrap().unitary().unwrap();
        assert!(circuit.max_abs_diff(&u2.mul(&u1).unwrap()) <= 1e-14);
    }

    #[test]
    fn pure_gamma_corner() {
        let control = ControlState::new(0.0, 0.0, 1.0, 0.0).unwrap();
        let angles = solve_synthesis(&control);
        assert_abs_diff_eq!(angles.theta1, std::f64::consts::FRAC_PI_2, epsilon = 1e-15);
        assert_eq!(angles.theta2, 0.0);
        assert_eq!(angles.theta3, 0.0);
        assert_control_close(&synth_control(&angles), &control, 1e-15);
    }

    #[test]
    fn beta_zero_omits_the_theta2_gate() {
        let (control, _) = crate::machines::bh::bh_symmetric_params(
            crate::machines::bh::symmetric_alpha_max(),
        )
        .unwrap();
        let angles = solve_synthesis(&control);
        assert_eq!(angles.theta2, 0.0);
        let circuit = synth_circuit(&angles).unwrap();
        assert_eq!(circuit.gates().len(), 2);
        let state = circuit
            .simulate(&StateVector::basis(2, 0).unwrap())
            .unwrap();
        assert!(state.max_abs_diff(&control.to_state()) <= 1e-12);
    }

    #[test]
    fn roundtrip_on_sampled_controls() {
        let mut rng = StdRng::seed_from_u64(7);
        let mut fixed = vec![
            ControlState::new(0.6, 0.3, 0.5, 0.5477225575051661).unwrap(),
            ControlState::new(-0.9, 0.1, -0.3, 0.3).unwrap(),
        ];
        for _ in 0..30 {
            let raw: [f64; 4] = std::array::from_fn(|_| rng.random::<f64>() - 0.5);
            let norm = raw.iter().map(|x| x * x).sum::<f64>().sqrt();
            fixed.push(
                ControlState::new(raw[0] / norm, raw[1] / norm, raw[2] / norm, raw[3] / norm)
                    .unwrap(),
            );
        }
        for control in fixed {
            let angles = solve_synthesis(&control);
            assert_control_close(&synth_control(&angles), &control, 1e-10);
            let circuit = synth_circuit(&angles).unwrap();
            let state = circuit
                .simulate(&StateVector::basis(2, 0).unwrap())
                .unwrap();
            assert!(state.max_abs_diff(&control.to_state()) <= 1e-10);
        }
    }
}
