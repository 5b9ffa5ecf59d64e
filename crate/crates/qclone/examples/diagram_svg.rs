//! Deterministic SVG diagrams: the Buzek-Hillery machine (a pure exchange
//! of states, so every column is a label-free permutation) and the
//! Griffiths-Niu machine with its entry labels.
//!
//! Run with: cargo run --example diagram_svg

use num_complex::Complex64;
use qclone::diagram::{compile_diagram, render_svg};
use qclone::linalg::StateVector;
use qclone::machines::{bh_circuit, bh_symmetric_params, gn_circuit, symmetric_alpha_max, GnParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (control, _) = bh_symmetric_params(symmetric_alpha_max())?;
    let input = StateVector::qubit(Complex64::new(0.6, 0.0), Complex64::new(0.8, 0.0))?;
    let initial = control.to_state().tensor(&input)?;
    let bh = compile_diagram(&bh_circuit(), &initial, false)?;
    std::fs::write("bh_diagram.svg", render_svg(&bh)?)?;
    println!("wrote bh_diagram.svg ({} columns, {} state lines)", bh.columns.len(), bh.n_states);

    let gn_initial = StateVector::new(vec![
        Complex64::new(0.6, 0.0),
        Complex64::new(0.8, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
    ])?;
    let gn = compile_diagram(&gn_circuit(&GnParams::new(0.7, 0.3)), &gn_initial, true)?;
    std::fs::write("gn_diagram.svg", render_svg(&gn)?)?;
    println!("wrote gn_diagram.svg ({} columns, {} state lines)", gn.columns.len(), gn.n_states);
    Ok(())
}
