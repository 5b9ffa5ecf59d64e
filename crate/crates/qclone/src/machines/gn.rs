//! The Griffiths-Niu copying machine (modified form, with the trailing
//! swap already folded in so that zero perturbation angles leave the input
//! qubit untouched).
//!
//! Two qubits: Bob, the input carrier, is the least significant bit and
//! Eve's probe is the most significant bit. The machine is a five-gate
//! sequence A, B, C, B, D where A and C rotate the probe by θ₀/2 and θ₁/2
//! and B, D are c-not permutations. Everything downstream (reduced density
//! matrices, Bloch maps) is parameterized by the half-angle sums
//! `α = (θ₀+θ₁)/2` and `β = (θ₀−θ₁)/2`.

use num_complex::Complex64;

use crate::density::{BlochVector, DensityMatrix};
use crate::error::{Error, Result};
use crate::gates::{Circuit, GateSpec};
use crate::linalg::{StateVector, UnitaryMatrix, ALGEBRA_TOL};

/// Bob's qubit index (the input carrier).
pub const GN_BOB_QUBIT: usize = 0;
/// Eve's qubit index (the probe, initialized to |0⟩).
pub const GN_EVE_QUBIT: usize = 1;

/// Perturbation angles of the two rotation gates, in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GnParams {
    pub theta0: f64,
    pub theta1: f64,
}

impl GnParams {
    pub fn new(theta0: f64, theta1: f64) -> Self {
        Self { theta0, theta1 }
    }

    /// `α = (θ₀ + θ₁)/2`.
    pub fn angle_sum(&self) -> f64 {
        (self.theta0 + self.theta1) / 2.0
    }

    /// `β = (θ₀ − θ₁)/2`.
    pub fn angle_diff(&self) -> f64 {
        (self.theta0 - self.theta1) / 2.0
    }
}

/// The four operator matrices of the machine, in application order
/// A, B, C, B, D.
#[derive(Debug, Clone)]
pub struct GnOperators {
    pub a: UnitaryMatrix,
    pub b: UnitaryMatrix,
    pub c: UnitaryMatrix,
    pub d: UnitaryMatrix,
}

fn rotation_on_msb(theta: f64) -> UnitaryMatrix {
    let (s, c) = (theta / 2.0).sin_cos();
    UnitaryMatrix::from_real_rows(
        4,
        &[
            c, 0.0, s, 0.0, //
            0.0, c, 0.0, s, //
            -s, 0.0, c, 0.0, //
            0.0, -s, 0.0, c,
        ],
    )
    .expect("rotation block is unitary")
}

/// Exact operator matrices: A and C rotate the probe, B and D are the
/// fixed c-not permutations (independent of the angles).
pub fn gn_operators(p: &GnParams) -> GnOperators {
    let b = UnitaryMatrix::from_real_rows(
        4,
        &[
            1.0, 0.0, 0.0, 0.0, //
            0.0, 0.0, 0.0, 1.0, //
            0.0, 0.0, 1.0, 0.0, //
            0.0, 1.0, 0.0, 0.0,
        ],
    )
    .expect("permutation");
    let d = UnitaryMatrix::from_real_rows(
        4,
        &[
            1.0, 0.0, 0.0, 0.0, //
            0.0, 1.0, 0.0, 0.0, //
            0.0, 0.0, 0.0, 1.0, //
            0.0, 0.0, 1.0, 0.0,
        ],
    )
    .expect("permutation");
    GnOperators {
        a: rotation_on_msb(p.theta0),
        b,
        c: rotation_on_msb(p.theta1),
        d,
    }
}

/// Closed form of the composite `D·B·C·B·A` in terms of `cos/sin` of the
/// angle sum and difference.
pub fn gn_composite(p: &GnParams) -> UnitaryMatrix {
    let (sa, ca) = p.angle_sum().sin_cos();
    let (sb, cb) = p.angle_diff().sin_cos();
    UnitaryMatrix::from_real_rows(
        4,
        &[
            ca, 0.0, sa, 0.0, //
            0.0, cb, 0.0, sb, //
            0.0, -sb, 0.0, cb, //
            -sa, 0.0, ca, 0.0,
        ],
    )
    .expect("composite is unitary")
}

/// The machine as a gate-level circuit: rotation, c-not-r, rotation,
/// c-not-r, c-not. Composes to [`gn_composite`].
pub fn gn_circuit(p: &GnParams) -> Circuit {
    Circuit::from_gates(
        2,
        vec![
            GateSpec::crot(GN_EVE_QUBIT, p.theta0),
            GateSpec::cnot_r(GN_BOB_QUBIT, GN_EVE_QUBIT),
            GateSpec::crot(GN_EVE_QUBIT, p.theta1),
            GateSpec::cnot_r(GN_BOB_QUBIT, GN_EVE_QUBIT),
            GateSpec::cnot(GN_EVE_QUBIT, GN_BOB_QUBIT),
        ],
    )
    .expect("fixed two-qubit circuit")
}

/// Closed form of the output state `(C_α a, C_β b, −S_β b, −S_α a)`.
pub fn gn_output_state(p: &GnParams, a: Complex64, b: Complex64) -> Result<StateVector> {
    check_input(a, b)?;
    let (sa, ca) = p.angle_sum().sin_cos();
    let (sb, cb) = p.angle_diff().sin_cos();
    StateVector::new(vec![ca * a, cb * b, -sb * b, -sa * a])
}

/// Full evolution record: the six states Ψ₀…Ψ₅ and, for stages 2 to 5,
/// Bob's and Eve's reduced density matrices.
#[derive(Debug, Clone)]
pub struct GnTrace {
    pub states: [StateVector; 6],
    rho_bob: [DensityMatrix; 4],
    rho_eve: [DensityMatrix; 4],
}

impl GnTrace {
    /// Bob's reduced matrix after stage `2 ..= 5`.
    pub fn rho_bob(&self, stage: usize) -> &DensityMatrix {
        assert!((2..=5).contains(&stage), "stages 2..=5 have reduced matrices");
        &self.rho_bob[stage - 2]
    }

    /// Eve's reduced matrix after stage `2 ..= 5`.
    pub fn rho_eve(&self, stage: usize) -> &DensityMatrix {
        assert!((2..=5).contains(&stage), "stages 2..=5 have reduced matrices");
        &self.rho_eve[stage - 2]
    }

    pub fn output(&self) -> &StateVector {
        &self.states[5]
    }
}

fn check_input(a: Complex64, b: Complex64) -> Result<()> {
    let norm_sq = a.norm_sqr() + b.norm_sqr();
    if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > ALGEBRA_TOL {
        return Err(Error::NotNormalized {
            norm: norm_sq.sqrt(),
        });
    }
    Ok(())
}

/// Run the machine on the input qubit `a|0⟩ + b|1⟩` (probe starts in |0⟩)
/// and record every intermediate state and reduced matrix.
pub fn gn_run(p: &GnParams, a: Complex64, b: Complex64) -> Result<GnTrace> {
    check_input(a, b)?;
    let ops = gn_operators(p);
    let zero = Complex64::default();
    let psi0 = StateVector::new(vec![a, b, zero, zero])?;
    let psi1 = ops.a.apply(&psi0)?;
    let psi2 = ops.b.apply(&psi1)?;
    let psi3 = ops.c.apply(&psi2)?;
    let psi4 = ops.b.apply(&psi3)?;
    let psi5 = ops.d.apply(&psi4)?;
    let states = [psi0, psi1, psi2, psi3, psi4, psi5];

    let mut rho_bob = Vec::with_capacity(4);
    let mut rho_eve = Vec::with_capacity(4);
    for state in &states[2..] {
        let rho = DensityMatrix::from_state(state);
        rho_bob.push(rho.partial_trace(&[GN_EVE_QUBIT])?);
        rho_eve.push(rho.partial_trace(&[GN_BOB_QUBIT])?);
    }
    Ok(GnTrace {
        states,
        rho_bob: rho_bob.try_into().expect("four stages"),
        rho_eve: rho_eve.try_into().expect("four stages"),
    })
}

/// Affine map on Bloch coordinates: the X and Y axes scale, the Z axis
/// scales and shifts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochMap {
    pub x_scale: f64,
    pub y_scale: f64,
    pub z_scale: f64,
    pub z_offset: f64,
}

impl BlochMap {
    pub fn apply(&self, b: &BlochVector) -> Result<BlochVector> {
        BlochVector::new(
            self.x_scale * b.x,
            self.y_scale * b.y,
            self.z_offset + self.z_scale * b.z,
        )
    }

    pub fn is_identity(&self) -> bool {
        self == &BlochMap {
            x_scale: 1.0,
            y_scale: 1.0,
            z_scale: 1.0,
            z_offset: 0.0,
        }
    }
}

/// Closed-form Bloch maps of the machine output for Bob and Eve. Note the
/// Z offsets: both spheres are displaced, with the offset/scale pair of one
/// party being the swapped pair of the other.
pub fn gn_bloch_maps(p: &GnParams) -> (BlochMap, BlochMap) {
    let (sa, ca) = p.angle_sum().sin_cos();
    let (sb, cb) = p.angle_diff().sin_cos();
    let bob = BlochMap {
        x_scale: ca * cb + sa * sb,
        y_scale: ca * cb - sa * sb,
        z_scale: ca * ca - sb * sb,
        z_offset: ca * ca - cb * cb,
    };
    let eve = BlochMap {
        x_scale: -(ca * sb + sa * cb),
        y_scale: -ca * sb + sa * cb,
        z_scale: ca * ca - cb * cb,
        z_offset: ca * ca - sb * sb,
    };
    (bob, eve)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::is_product_2q;
    use crate::linalg::compose;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn theta0_zero_makes_a_identity() {
        let ops = gn_operators(&GnParams::new(0.0, 0.3));
        assert_eq!(
            ops.a.max_abs_diff(&UnitaryMatrix::identity(4).unwrap()),
            0.0
        );
    }

    #[test]
    fn b_and_d_are_the_listed_permutations() {
        let ops = gn_operators(&GnParams::new(0.9, 0.4));
        let b = UnitaryMatrix::from_real_rows(
            4,
            &[
                1., 0., 0., 0., //
                0., 0., 0., 1., //
                0., 0., 1., 0., //
                0., 1., 0., 0.,
            ],
        )
        .unwrap();
        assert_eq!(ops.b.max_abs_diff(&b), 0.0);
        let d = UnitaryMatrix::from_real_rows(
            4,
            &[
                1., 0., 0., 0., //
                0., 1., 0., 0., //
                0., 0., 0., 1., //
                0., 0., 1., 0.,
            ],
        )
        .unwrap();
        assert_eq!(ops.d.max_abs_diff(&d), 0.0);
    }

    #[test]
    fn c_at_theta1_pi_swaps_blocks_with_sign() {
        let ops = gn_operators(&GnParams::new(0.0, std::f64::consts::PI));
        let expected = UnitaryMatrix::from_real_rows(
            4,
            &[
                0., 0., 1., 0., //
                0., 0., 0., 1., //
                -1., 0., 0., 0., //
                0., -1., 0., 0.,
            ],
        )
        .unwrap();
        assert!(ops.c.max_abs_diff(&expected) <= 1e-15);
    }

    #[test]
    fn composite_matches_operator_product_and_circuit() {
        let p = GnParams::new(0.7, 0.3);
        let ops = gn_operators(&p);
        let product = compose(&[ops.a, ops.b.clone(), ops.c, ops.b, ops.d]).unwrap();
        assert!(product.max_abs_diff(&gn_composite(&p)) <= 1e-15);
        let circuit = gn_circuit(&p).unitary().unwrap();
        assert!(circuit.max_abs_diff(&gn_composite(&p)) <= 1e-15);
    }

    #[test]
    fn zero_angles_leave_bob_unchanged() {
        let trace = gn_run(&GnParams::new(0.0, 0.0), c(0.6, 0.0), c(0.8, 0.0)).unwrap();
        let out = trace.output();
        assert_abs_diff_eq!(out.amplitude(0).re, 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(out.amplitude(1).re, 0.8, epsilon = 1e-15);
        assert_eq!(out.amplitude(2).norm(), 0.0);
        assert_eq!(out.amplitude(3).norm(), 0.0);
        // Eve's probe stays at |0⟩, the north pole.
        let eve = trace.rho_eve(5).bloch().unwrap();
        assert_abs_diff_eq!(eve.z, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn output_matches_closed_form() {
        let p = GnParams::new(0.7, 0.3);
        let (a, b) = (c(0.6, 0.0), c(0.8, 0.0));
        let trace = gn_run(&p, a, b).unwrap();
        let closed = gn_output_state(&p, a, b).unwrap();
        assert!(trace.output().max_abs_diff(&closed) <= 1e-15);
    }

    #[test]
    fn applying_b_swaps_the_rotated_components() {
        // Ψ₂ = B·Ψ₁ = (C₀a, −S₀b, −S₀a, C₀b).
        let p = GnParams::new(0.7, 0.3);
        let (a, b) = (c(0.6, 0.0), c(0.0, 0.8));
        let trace = gn_run(&p, a, b).unwrap();
        let (s0, c0) = (p.theta0 / 2.0).sin_cos();
        let expected = [a * c0, b * -s0, a * -s0, b * c0];
        for (k, want) in expected.iter().enumerate() {
            assert!((trace.states[2].amplitude(k) - want).norm() <= 1e-15);
        }
    }

    #[test]
    fn stage4_bob_coherence_is_cos_theta1() {
        let p = GnParams::new(0.7, 0.3);
        let (a, b) = (c(0.6, 0.0), c(0.8, 0.0));
        let trace = gn_run(&p, a, b).unwrap();
        let coherence = trace.rho_bob(4).entry(0, 1);
        // (C₁² − S₁²) ab* = cos θ₁ · ab*
        let expected = (a * b.conj()) * p.theta1.cos();
        assert!((coherence - expected).norm() <= 1e-14);
    }

    #[test]
    fn unnormalized_input_rejected() {
        assert!(gn_run(&GnParams::new(0.1, 0.2), c(1.0, 0.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn bloch_maps_at_zero_angles() {
        let (bob, eve) = gn_bloch_maps(&GnParams::new(0.0, 0.0));
        assert!(bob.is_identity());
        // Eve is pinned at the north pole: no scaling, unit offset.
        assert_eq!(eve.x_scale, 0.0);
        assert_eq!(eve.y_scale, 0.0);
        assert_eq!(eve.z_scale, 0.0);
        assert_eq!(eve.z_offset, 1.0);
    }

    #[test]
    fn bloch_z_terms_are_swapped_pairs() {
        for (t0, t1) in [(0.7, 0.3), (1.1, 2.0), (0.2, 1.9), (2.5, 0.4)] {
            let (bob, eve) = gn_bloch_maps(&GnParams::new(t0, t1));
            assert_abs_diff_eq!(bob.z_offset, eve.z_scale, epsilon = 1e-15);
            assert_abs_diff_eq!(bob.z_scale, eve.z_offset, epsilon = 1e-15);
        }
    }

    #[test]
    fn psi1_always_product_psi2_entangled_by_determinant() {
        // det of the Ψ₂ amplitude table is cos θ₀ · ab: the first c-not
        // entangles except where cos θ₀ or an amplitude vanishes.
        let (a, b) = (c(0.6, 0.0), c(0.0, 0.8));
        for theta0 in [0.0, 0.4, std::f64::consts::FRAC_PI_2, 2.0, std::f64::consts::PI] {
            let trace = gn_run(&GnParams::new(theta0, 0.3), a, b).unwrap();
            assert!(is_product_2q(&trace.states[1], 1e-10).unwrap());
            let expect_product = (theta0.cos() * (a * b).norm()).abs() <= 1e-10;
            assert_eq!(
                is_product_2q(&trace.states[2], 1e-10).unwrap(),
                expect_product,
                "theta0 = {theta0}"
            );
        }
    }

    #[test]
    fn stage5_not_recoverable_from_stage4() {
        // (θ₀, θ₁) and (θ₀, −θ₁) give identical stage-4 reduced matrices
        // for |a| = |b| but different stage-5 matrices: the missing
        // information lives in the two-qubit entanglement. Found by grid
        // search over angle pairs.
        let amp = 1.0 / 2.0_f64.sqrt();
        let (a, b) = (c(amp, 0.0), c(amp * 0.4f64.cos(), amp * 0.4f64.sin()));
        let grid: Vec<f64> = (0..7).map(|k| -2.1 + 0.7 * k as f64).collect();
        let mut found = false;
        'outer: for &t0 in &grid {
            for &t1 in &grid {
                let first = gn_run(&GnParams::new(t0, t1), a, b).unwrap();
                for &u0 in &grid {
                    for &u1 in &grid {
                        if (t0, t1) == (u0, u1) {
                            continue;
                        }
                        let second = gn_run(&GnParams::new(u0, u1), a, b).unwrap();
                        let same4 = first.rho_bob(4).max_abs_diff(second.rho_bob(4)) <= 1e-12
                            && first.rho_eve(4).max_abs_diff(second.rho_eve(4)) <= 1e-12;
                        let differ5 = first.rho_bob(5).max_abs_diff(second.rho_bob(5)) > 1e-3
                            || first.rho_eve(5).max_abs_diff(second.rho_eve(5)) > 1e-3;
                        if same4 && differ5 {
                            found = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
        assert!(found, "no ambiguous stage-4 pair found on the grid");
    }
}
