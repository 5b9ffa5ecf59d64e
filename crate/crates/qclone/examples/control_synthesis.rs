//! Synthesize the Buzek-Hillery control state from three angles, emit the
//! circuit as a script, and re-simulate it to confirm the round trip.
//!
//! Run with: cargo run --example control_synthesis

use qclone::fmt::format_real;
use qclone::linalg::StateVector;
use qclone::machines::{bh_symmetric_params, solve_synthesis, synth_circuit, synth_control};
use qclone::script::{print_script, ParsedScript};

fn main() {
    // The symmetric-optimum control state has beta = 0, so its synthesis
    // needs only two gates: the theta2 gate is absent.
    let (control, _) = bh_symmetric_params(qclone::machines::symmetric_alpha_max()).unwrap();
    let angles = solve_synthesis(&control);
    println!("control state: ({}, {}, {}, {})",
        format_real(control.alpha),
        format_real(control.beta),
        format_real(control.gamma),
        format_real(control.delta)
    );
    println!(
        "angles: theta1 = {}, theta2 = {}, theta3 = {}",
        format_real(angles.theta1),
        format_real(angles.theta2),
        format_real(angles.theta3)
    );
    if angles.theta2 == 0.0 {
        println!("beta = 0, so the controlled-theta2 gate is absent");
    }

    let circuit = synth_circuit(&angles).unwrap();
    let script = ParsedScript {
        initial: StateVector::basis(2, 0).unwrap(),
        circuit,
    };
    println!("\nscript:\n{}", print_script(&script));

    let reached = script.circuit.simulate(&script.initial).unwrap();
    let error = reached.max_abs_diff(&control.to_state());
    println!("re-simulated |00> through the script: max error {}", format_real(error));

    // Round trip on the closed form as well.
    let back = synth_control(&angles);
    println!(
        "closed form reproduces the control state to {}",
        format_real(
            back.components()
                .iter()
                .zip(control.components())
                .map(|(g, w)| (g - w).abs())
                .fold(0.0, f64::max)
        )
    );
}
