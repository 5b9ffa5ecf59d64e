//! Parse a circuit script, simulate it, and read out amplitudes and
//! per-qubit Bloch vectors — the library side of `qclone simulate`.
//!
//! Run with: cargo run --example simulate_script

use qclone::density::DensityMatrix;
use qclone::fmt::{format_complex, format_real};
use qclone::script::parse_script;

const SCRIPT: &str = "\
# swap the clones after a Buzek-Hillery run: three c-nots make a swap
qubits 3
state 0.489897948557, 0.653197264742, 0, 0, 0.244948974278, 0.326598632371, 0.244948974278, 0.326598632371
cnotr 0 1
cnotr 0 2
cnot 1 0
cnot 2 0
cnot 1 0
cnotr 0 1
cnot 1 0
";

fn main() {
    let script = parse_script(SCRIPT).unwrap();
    let n = script.circuit.n_qubits();
    let state = script.circuit.simulate(&script.initial).unwrap();

    println!("final amplitudes:");
    for i in 0..state.dim() {
        println!("  |{i:0n$b}>  {}", format_complex(state.amplitude(i)));
    }

    println!("\nper-qubit Bloch vectors:");
    let rho = DensityMatrix::from_state(&state);
    for qubit in 0..n {
        let traced: Vec<usize> = (0..n).filter(|&q| q != qubit).collect();
        let b = rho.partial_trace(&traced).unwrap().bloch().unwrap();
        println!(
            "  qubit {qubit}: ({}, {}, {})",
            format_real(b.x),
            format_real(b.y),
            format_real(b.z)
        );
    }
}
