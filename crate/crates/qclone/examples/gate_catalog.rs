//! The elementary gate catalog: build every two-qubit catalog gate,
//! verify unitarity, and print the matrices.
//!
//! Run with: cargo run --example gate_catalog

use qclone::fmt::format_complex;
use qclone::gates::{build_gate_matrix, catalog_permutation_gates};
use qclone::linalg::check_unitary;

fn main() {
    println!("=== Elementary two-qubit gate catalog ===\n");
    for (label, spec) in catalog_permutation_gates() {
        let matrix = build_gate_matrix(&spec, 2).unwrap();
        let (unitary, residual) = check_unitary(matrix.matrix());
        println!("{label}  ({})", spec.label());
        for row in 0..matrix.dim() {
            let entries: Vec<String> = (0..matrix.dim())
                .map(|col| format_complex(matrix.entry(row, col)))
                .collect();
            println!("  [{}]", entries.join(", "));
        }
        println!("  unitary: {unitary} (residual {residual:.1e})\n");
    }
    println!("Single-qubit unitaries embed on either bit: see `u1q` in the");
    println!("script grammar, or `qclone gates` for the symbolic forms.");
}
