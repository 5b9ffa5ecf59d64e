//! Quantum copying machines: Griffiths-Niu, Buzek-Hillery, and the
//! control-state synthesis for the latter.

pub mod bh;
pub mod gn;
pub mod synth;

pub use bh::{
    bh_circuit, bh_equatorial_params, bh_run, bh_run_state, bh_symmetric_params, bh_unitary,
    sweep_equatorial, sweep_symmetric, symmetric_alpha_max, BhRun, ControlState,
    EquatorialSweepRow, ScalingFactors, SymmetricSweepRow, BH_ANCILLA_QUBIT, BH_BOB_QUBIT,
    BH_EVE_QUBIT, SYMMETRIC_ALPHA_MIN,
};
pub use gn::{
    gn_bloch_maps, gn_circuit, gn_composite, gn_operators, gn_output_state, gn_run, BlochMap,
    GnOperators, GnParams, GnTrace, GN_BOB_QUBIT, GN_EVE_QUBIT,
};
pub use synth::{solve_synthesis, synth_circuit, synth_control, synth_operators, SynthesisAngles};
