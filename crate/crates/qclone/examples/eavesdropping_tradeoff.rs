//! The cloning machines as eavesdropping attacks: Eve inserts a cloner
//! into the channel, keeps one copy and forwards the other to Bob. Her
//! information gain is tied to the error rate she inflicts, which is what
//! the receiving parties can monitor.
//!
//! Run with: cargo run --example eavesdropping_tradeoff

use num_complex::Complex64;
use qclone::density::DensityMatrix;
use qclone::fmt::format_real;
use qclone::linalg::StateVector;
use qclone::machines::{bh_run, bh_symmetric_params, sweep_symmetric, GnParams};

fn main() {
    println!("=== Eavesdropping trade-off ===\n");

    println!("Six-state protocol (isotropic clones): Eve's fidelity rises");
    println!("only as Bob's falls; the crossing point is F = 5/6.\n");
    println!("alpha          f_bob          f_eve          disturbance (1 - f_bob)");
    for row in sweep_symmetric(7).unwrap() {
        println!(
            "{:<14} {:<14} {:<14} {}",
            format_real(row.alpha),
            format_real(row.f_bob),
            format_real(row.f_eve),
            format_real(1.0 - row.f_bob)
        );
    }

    // What Bob's monitoring actually sees: the state he measures is no
    // longer the one Alice sent.
    let (control, _) = bh_symmetric_params(0.78).unwrap();
    let (a, b) = (Complex64::new(0.6, 0.0), Complex64::new(0.8, 0.0));
    let sent = StateVector::qubit(a, b).unwrap();
    let run = bh_run(&control, a, b).unwrap();
    println!(
        "\nIntermediate setting alpha = 0.78: Bob's copy passes Alice's test\nwith probability {}, Eve's with {}.",
        format_real(run.rho_bob.fidelity_pure(&sent).unwrap()),
        format_real(run.rho_eve.fidelity_pure(&sent).unwrap())
    );

    // The Griffiths-Niu machine is simpler but displaces the Bloch sphere,
    // so its disturbance is visible even on basis states.
    let trace = qclone::machines::gn_run(&GnParams::new(0.7, 0.3), a, b).unwrap();
    let bob = trace.rho_bob(5);
    let eve = trace.rho_eve(5);
    let input_bloch = DensityMatrix::from_state(&sent).bloch().unwrap();
    println!("\nGriffiths-Niu at (0.7, 0.3) on the same input:");
    println!(
        "  input z = {}, bob z = {}, eve z = {} (note the offset)",
        format_real(input_bloch.z),
        format_real(bob.bloch().unwrap().z),
        format_real(eve.bloch().unwrap().z)
    );
    println!(
        "  fidelities: bob {}, eve {}",
        format_real(bob.fidelity_pure(&sent).unwrap()),
        format_real(eve.fidelity_pure(&sent).unwrap())
    );
}
