//! Diagrams of states in the terminal: one line per basis state, heavy
//! lines carrying amplitude, crossings per gate column. Shows the
//! Griffiths-Niu machine before and after simplification.
//!
//! Run with: cargo run --example diagram_ascii

use num_complex::Complex64;
use qclone::diagram::{compile_diagram, render_ascii, simplify_diagram};
use qclone::linalg::StateVector;
use qclone::machines::{gn_circuit, GnParams};

fn main() {
    let circuit = gn_circuit(&GnParams::new(0.7, 0.3));
    let initial = StateVector::new(vec![
        Complex64::new(0.6, 0.0),
        Complex64::new(0.8, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
    ])
    .unwrap();

    let diagram = compile_diagram(&circuit, &initial, true).unwrap();
    println!("Griffiths-Niu machine, full diagram of states");
    println!("(footer: '-' product, 'E' entangled after the column)\n");
    println!("{}", render_ascii(&diagram).unwrap());

    println!("Simplified: thin (amplitude-free) edges dropped, adjacent");
    println!("permutation columns merged\n");
    println!("{}", render_ascii(&simplify_diagram(&diagram)).unwrap());
}
