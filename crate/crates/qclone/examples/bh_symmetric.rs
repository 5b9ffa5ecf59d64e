//! The symmetric Buzek-Hillery family: sweep the free parameter alpha from
//! perfect transmission (Bob untouched, Eve blind) to the symmetric
//! optimum where both copies shrink the Bloch sphere by 2/3.
//!
//! Run with: cargo run --example bh_symmetric

use num_complex::Complex64;
use qclone::density::DensityMatrix;
use qclone::fmt::format_real;
use qclone::linalg::StateVector;
use qclone::machines::{bh_run, bh_symmetric_params, sweep_symmetric, symmetric_alpha_max};

fn main() {
    println!("=== Buzek-Hillery, symmetric (six-state protocol) case ===\n");
    println!("alpha          s_bob          s_eve          f_bob          f_eve");
    for row in sweep_symmetric(9).unwrap() {
        println!(
            "{:<14} {:<14} {:<14} {:<14} {}",
            format_real(row.alpha),
            format_real(row.s_bob),
            format_real(row.s_eve),
            format_real(row.f_bob),
            format_real(row.f_eve)
        );
    }

    // At the upper endpoint both copies are the same isotropic shrink of
    // the input; check it on a concrete state.
    let alpha = symmetric_alpha_max();
    let (control, factors) = bh_symmetric_params(alpha).unwrap();
    let (a, b) = (Complex64::new(0.48, 0.36), Complex64::new(0.0, 0.8));
    let run = bh_run(&control, a, b).unwrap();
    let input = DensityMatrix::from_state(&StateVector::qubit(a, b).unwrap())
        .bloch()
        .unwrap();
    let bob = run.rho_bob.bloch().unwrap();
    let eve = run.rho_eve.bloch().unwrap();
    println!("\nAt alpha = sqrt(2/3) = {}:", format_real(alpha));
    println!(
        "  input bloch ({}, {}, {})",
        format_real(input.x),
        format_real(input.y),
        format_real(input.z)
    );
    println!(
        "  bob   bloch ({}, {}, {})",
        format_real(bob.x),
        format_real(bob.y),
        format_real(bob.z)
    );
    println!(
        "  eve   bloch ({}, {}, {})",
        format_real(eve.x),
        format_real(eve.y),
        format_real(eve.z)
    );
    println!(
        "  both scaled by s = {} -> fidelity (1+s)/2 = {}",
        format_real(factors.s_bob),
        format_real((1.0 + factors.s_bob) / 2.0)
    );
}
