//! Walk the Griffiths-Niu copying machine through all of its intermediate
//! states: where the information sits, when the two qubits entangle, and
//! what each party ends up holding.
//!
//! Run with: cargo run --example gn_machine

use num_complex::Complex64;
use qclone::density::{is_product_2q, PRODUCT_TOL};
use qclone::fmt::{format_complex, format_real};
use qclone::machines::{gn_bloch_maps, gn_run, GnParams};

fn main() {
    let params = GnParams::new(0.7, 0.3);
    let (a, b) = (Complex64::new(0.6, 0.0), Complex64::new(0.8, 0.0));
    println!("=== Griffiths-Niu machine ===");
    println!(
        "theta0 = {}, theta1 = {}  (angle sum {} / difference {})",
        params.theta0,
        params.theta1,
        format_real(params.angle_sum()),
        format_real(params.angle_diff())
    );
    println!("input qubit: {} |0> + {} |1>\n", a.re, b.re);

    let trace = gn_run(&params, a, b).unwrap();
    for (stage, state) in trace.states.iter().enumerate() {
        let amps: Vec<String> = (0..4).map(|i| format_complex(state.amplitude(i))).collect();
        let entangled = if is_product_2q(state, PRODUCT_TOL).unwrap() {
            "product"
        } else {
            "entangled"
        };
        println!("psi_{stage} = ({})  [{entangled}]", amps.join(", "));
    }

    println!("\nReduced states per stage (Bob = input carrier, Eve = probe):");
    for stage in 2..=5 {
        let bob = trace.rho_bob(stage).bloch().unwrap();
        let eve = trace.rho_eve(stage).bloch().unwrap();
        println!(
            "  stage {stage}: bob bloch ({}, {}, {})   eve bloch ({}, {}, {})",
            format_real(bob.x),
            format_real(bob.y),
            format_real(bob.z),
            format_real(eve.x),
            format_real(eve.y),
            format_real(eve.z)
        );
    }

    let (bob_map, eve_map) = gn_bloch_maps(&params);
    println!("\nClosed-form Bloch maps (note the Z displacement):");
    println!(
        "  bob: x' = {} x, y' = {} y, z' = {} + {} z",
        format_real(bob_map.x_scale),
        format_real(bob_map.y_scale),
        format_real(bob_map.z_offset),
        format_real(bob_map.z_scale)
    );
    println!(
        "  eve: x' = {} x, y' = {} y, z' = {} + {} z",
        format_real(eve_map.x_scale),
        format_real(eve_map.y_scale),
        format_real(eve_map.z_offset),
        format_real(eve_map.z_scale)
    );
}
