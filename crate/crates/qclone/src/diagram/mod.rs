//! Diagrams of states: a circuit drawn with one horizontal line per basis
//! state instead of one per qubit. Each gate becomes a column whose edges
//! connect input lines to output lines wherever the gate matrix has a
//! nonzero entry, labeled with that entry; lines that carry amplitude are
//! emphasized, so the flow of information is visible at a glance. The
//! representation has `2^n` lines by construction — the exponential size is
//! the point, not a defect — and rendering is capped accordingly.

mod ascii;
mod svg;

pub use ascii::render_ascii;
pub use svg::render_svg;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::density::is_product_2q;
use crate::error::{Error, Result};
use crate::fmt::format_complex;
use crate::gates::{build_gate_matrix, Circuit, GateKind, GateSpec};
use crate::linalg::StateVector;

/// Matrix entries and amplitudes below this are treated as absent.
pub const EDGE_TOL: f64 = 1e-12;

/// One crossing line of a column: input line `from` to output line `to`,
/// labeled with the matrix entry (unit entries get an empty label).
/// `emphasized` records whether the source line carried amplitude.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagramEdge {
    pub from: usize,
    pub to: usize,
    pub entry: Complex64,
    pub label: String,
    pub emphasized: bool,
}

/// One gate of the compiled circuit.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagramColumn {
    pub gate_label: String,
    pub edges: Vec<DiagramEdge>,
    /// Set when entanglement annotation was requested (two qubits only).
    pub entangled_after: Option<bool>,
}

/// Column-structured diagram over `2^n` state lines.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagram {
    pub n_qubits: usize,
    pub n_states: usize,
    /// Bitstring per line, MSB-first text (`01` is qubit1=0, qubit0=1).
    pub state_labels: Vec<String>,
    pub columns: Vec<DiagramColumn>,
    /// Amplitude presence per line, one row per column boundary
    /// (`columns.len() + 1` rows).
    pub line_active: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CompileOptions {
    /// Check factorizability after every column (two-qubit circuits only).
    pub annotate_entanglement: bool,
    /// Draw unitaries on the most significant bit in the alternative
    /// swap-conjugated form: swap, unitary on the least significant bit,
    /// swap (two-qubit circuits).
    pub expand_msb_unitary: bool,
}

fn entry_label(entry: Complex64) -> String {
    if entry == Complex64::new(1.0, 0.0) {
        String::new()
    } else {
        format_complex(entry)
    }
}

fn activity(state: &StateVector) -> Vec<bool> {
    (0..state.dim())
        .map(|i| state.amplitude(i).norm() > EDGE_TOL)
        .collect()
}

/// Compile a circuit and its initial state into a diagram.
pub fn compile_diagram(
    circuit: &Circuit,
    initial: &StateVector,
    annotate_entanglement: bool,
) -> Result<Diagram> {
    compile_diagram_with(
        circuit,
        initial,
        CompileOptions {
            annotate_entanglement,
            ..CompileOptions::default()
        },
    )
}

pub fn compile_diagram_with(
    circuit: &Circuit,
    initial: &StateVector,
    options: CompileOptions,
) -> Result<Diagram> {
    let n = circuit.n_qubits();
    if initial.n_qubits() != n {
        return Err(Error::DimensionMismatch {
            expected: circuit.dim(),
            got: initial.dim(),
        });
    }
    if options.annotate_entanglement && n != 2 {
        return Err(Error::QubitCount { expected: 2, got: n });
    }
    let mut gates: Vec<GateSpec> = Vec::new();
    for gate in circuit.gates() {
        if options.expand_msb_unitary && n == 2 && gate.kind == GateKind::U1q && gate.target == 1 {
            let u = gate.matrix2.expect("u1q carries its matrix");
            gates.push(GateSpec::swap(0, 1));
            gates.push(GateSpec::u1q(0, u));
            gates.push(GateSpec::swap(0, 1));
        } else {
            gates.push(gate.clone());
        }
    }

    let dim = circuit.dim();
    let mut state = initial.clone();
    let mut line_active = vec![activity(&state)];
    let mut columns = Vec::with_capacity(gates.len());
    for gate in &gates {
        let u = build_gate_matrix(gate, n)?;
        let mut edges = Vec::new();
        for from in 0..dim {
            let emphasized = state.amplitude(from).norm() > EDGE_TOL;
            for to in 0..dim {
                let entry = u.entry(to, from);
                if entry.norm() > EDGE_TOL {
                    edges.push(DiagramEdge {
                        from,
                        to,
                        entry,
                        label: entry_label(entry),
                        emphasized,
                    });
                }
            }
        }
        state = u.apply(&state)?;
        line_active.push(activity(&state));
        let entangled_after = if options.annotate_entanglement {
            Some(!is_product_2q(&state, crate::density::PRODUCT_TOL)?)
        } else {
            None
        };
        columns.push(DiagramColumn {
            gate_label: gate.label(),
            edges,
            entangled_after,
        });
    }

    Ok(Diagram {
        n_qubits: n,
        n_states: dim,
        state_labels: (0..dim).map(|i| format!("{i:0n$b}")).collect(),
        columns,
        line_active,
    })
}

pub(crate) fn column_matrix(column: &DiagramColumn, n_states: usize) -> DMatrix<Complex64> {
    let mut m = DMatrix::<Complex64>::zeros(n_states, n_states);
    for e in &column.edges {
        m[(e.to, e.from)] = e.entry;
    }
    m
}

fn is_pure_permutation(m: &DMatrix<Complex64>) -> bool {
    let n = m.nrows();
    let one = Complex64::new(1.0, 0.0);
    let mut col_counts = vec![0usize; n];
    for row in 0..n {
        let mut row_count = 0;
        for col in 0..n {
            let e = m[(row, col)];
            if e.norm() > EDGE_TOL {
                if (e - one).norm() > EDGE_TOL {
                    return false;
                }
                row_count += 1;
                col_counts[col] += 1;
            }
        }
        if row_count > 1 {
            return false;
        }
    }
    col_counts.iter().all(|&c| c <= 1)
}

/// Simplify a compiled diagram:
/// 1. edges leaving amplitude-free lines are dropped (the thin lines carry
///    no information for this input), and
/// 2. adjacent columns whose composition is a pure permutation are merged
///    into one column carrying the composed entries.
///
/// The simplified diagram maps the compiled input state to the same output
/// state; [`resimulate`] checks exactly that.
pub fn simplify_diagram(diagram: &Diagram) -> Diagram {
    let mut columns: Vec<DiagramColumn> = diagram
        .columns
        .iter()
        .map(|col| DiagramColumn {
            gate_label: col.gate_label.clone(),
            edges: col.edges.iter().filter(|e| e.emphasized).cloned().collect(),
            entangled_after: col.entangled_after,
        })
        .collect();
    let mut line_active = diagram.line_active.clone();

    let mut k = 0;
    while columns.len() >= 2 && k + 1 < columns.len() {
        let m1 = column_matrix(&columns[k], diagram.n_states);
        let m2 = column_matrix(&columns[k + 1], diagram.n_states);
        let prod = m2 * m1;
        if is_pure_permutation(&prod) {
            let mut edges = Vec::new();
            for from in 0..diagram.n_states {
                for to in 0..diagram.n_states {
                    let entry = prod[(to, from)];
                    if entry.norm() > EDGE_TOL {
                        edges.push(DiagramEdge {
                            from,
                            to,
                            entry,
                            label: entry_label(entry),
                            emphasized: line_active[k][from],
                        });
                    }
                }
            }
            let merged = DiagramColumn {
                gate_label: format!(
                    "{}·{}",
                    columns[k].gate_label,
                    columns[k + 1].gate_label
                ),
                edges,
                entangled_after: columns[k + 1].entangled_after,
            };
            columns[k] = merged;
            columns.remove(k + 1);
            line_active.remove(k + 1);
            // A merge can enable another with the new neighbor.
            k = k.saturating_sub(1);
        } else {
            k += 1;
        }
    }

    Diagram {
        n_qubits: diagram.n_qubits,
        n_states: diagram.n_states,
        state_labels: diagram.state_labels.clone(),
        columns,
        line_active,
    }
}

/// Push a state through the diagram's column matrices. Used to confirm
/// that simplification preserved the input-to-output amplitude map.
pub fn resimulate(diagram: &Diagram, initial: &StateVector) -> Result<StateVector> {
    if initial.dim() != diagram.n_states {
        return Err(Error::DimensionMismatch {
            expected: diagram.n_states,
            got: initial.dim(),
        });
    }
    let mut amps = initial.amplitudes().clone();
    for column in &diagram.columns {
        amps = column_matrix(column, diagram.n_states) * amps;
    }
    StateVector::renormalized(amps.iter().copied().collect(), 1e-9)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machines::{gn_circuit, GnParams};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn edge_pairs(col: &DiagramColumn) -> Vec<(usize, usize)> {
        col.edges.iter().map(|e| (e.from, e.to)).collect()
    }

    #[test]
    fn single_qubit_not_on_zero() {
        let circuit = Circuit::from_gates(1, vec![GateSpec::not(0)]).unwrap();
        let d = compile_diagram(&circuit, &StateVector::basis(1, 0).unwrap(), false).unwrap();
        assert_eq!(d.n_states, 2);
        assert_eq!(d.state_labels, vec!["0", "1"]);
        assert_eq!(d.columns.len(), 1);
        assert_eq!(edge_pairs(&d.columns[0]), vec![(0, 1), (1, 0)]);
        let e01 = &d.columns[0].edges[0];
        assert!(e01.emphasized && e01.label.is_empty());
        assert!(!d.columns[0].edges[1].emphasized);
        assert_eq!(d.line_active[0], vec![true, false]);
        assert_eq!(d.line_active[1], vec![false, true]);
    }

    #[test]
    fn cnot_crosses_the_msb_one_pair() {
        let circuit = Circuit::from_gates(2, vec![GateSpec::cnot(1, 0)]).unwrap();
        let plus = StateVector::renormalized(vec![c(0.5, 0.0); 4], 1e-9).unwrap();
        let d = compile_diagram(&circuit, &plus, false).unwrap();
        assert_eq!(edge_pairs(&d.columns[0]), vec![(0, 0), (1, 1), (2, 3), (3, 2)]);
    }

    #[test]
    fn identity_like_column_has_parallel_edges() {
        let circuit = Circuit::from_gates(2, vec![GateSpec::crot(1, 0.0)]).unwrap();
        let plus = StateVector::renormalized(vec![c(0.5, 0.0); 4], 1e-9).unwrap();
        let d = compile_diagram(&circuit, &plus, false).unwrap();
        assert_eq!(edge_pairs(&d.columns[0]), vec![(0, 0), (1, 1), (2, 2), (3, 3)]);
    }

    #[test]
    fn permutation_columns_have_n_edges_dense_at_most_2n() {
        let u = [[c(0.6, 0.0), c(0.8, 0.0)], [c(-0.8, 0.0), c(0.6, 0.0)]];
        let circuit = Circuit::from_gates(
            3,
            vec![
                GateSpec::cnot(2, 0),
                GateSpec::swap(0, 2),
                GateSpec::u1q(1, u),
                GateSpec::crot_controlled(0, 2, 1.3),
            ],
        )
        .unwrap();
        let initial = StateVector::basis(3, 5).unwrap();
        let d = compile_diagram(&circuit, &initial, false).unwrap();
        assert_eq!(d.columns[0].edges.len(), 8);
        assert_eq!(d.columns[1].edges.len(), 8);
        assert!(d.columns[2].edges.len() <= 16);
        assert!(d.columns[3].edges.len() <= 16);
    }

    #[test]
    fn edges_rebuild_the_gate_matrix() {
        let p = GnParams::new(0.7, 0.3);
        let circuit = gn_circuit(&p);
        let initial = StateVector::new(vec![c(0.6, 0.0), c(0.8, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        let d = compile_diagram(&circuit, &initial, false).unwrap();
        for (gate, col) in circuit.gates().iter().zip(&d.columns) {
            let rebuilt = column_matrix(col, 4);
            let expected = build_gate_matrix(gate, 2).unwrap();
            let diff = (&rebuilt - expected.matrix())
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            assert!(diff <= 1e-12);
        }
    }

    #[test]
    fn entanglement_annotation_follows_the_run() {
        let p = GnParams::new(0.7, 0.3);
        let circuit = gn_circuit(&p);
        let initial = StateVector::new(vec![c(0.6, 0.0), c(0.8, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        let d = compile_diagram(&circuit, &initial, true).unwrap();
        // First rotation never entangles; the first c-not does here.
        assert_eq!(d.columns[0].entangled_after, Some(false));
        assert_eq!(d.columns[1].entangled_after, Some(true));
        let three_qubit = Circuit::new(3).unwrap();
        assert!(compile_diagram(&three_qubit, &StateVector::basis(3, 0).unwrap(), true).is_err());
    }

    #[test]
    fn gn_simplification_drops_dead_lines_in_the_first_column() {
        let p = GnParams::new(0.7, 0.3);
        let circuit = gn_circuit(&p);
        let initial = StateVector::new(vec![c(0.6, 0.0), c(0.8, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        let d = compile_diagram(&circuit, &initial, false).unwrap();
        let s = simplify_diagram(&d);
        assert!(s.columns[0].edges.iter().all(|e| e.from < 2));
        let out = resimulate(&s, &initial).unwrap();
        let direct = circuit.simulate(&initial).unwrap();
        assert!(out.max_abs_diff(&direct) <= 1e-12);
    }

    #[test]
    fn identity_circuit_diagram_is_unchanged_by_simplify() {
        let circuit = Circuit::from_gates(2, vec![GateSpec::crot(0, 0.0)]).unwrap();
        let plus = StateVector::renormalized(vec![c(0.5, 0.0); 4], 1e-9).unwrap();
        let d = compile_diagram(&circuit, &plus, false).unwrap();
        assert_eq!(simplify_diagram(&d), d);
    }

    #[test]
    fn double_cnot_merges_to_identity_column() {
        let circuit =
            Circuit::from_gates(2, vec![GateSpec::cnot(1, 0), GateSpec::cnot(1, 0)]).unwrap();
        let plus = StateVector::renormalized(vec![c(0.5, 0.0); 4], 1e-9).unwrap();
        let d = compile_diagram(&circuit, &plus, false).unwrap();
        let s = simplify_diagram(&d);
        assert_eq!(s.columns.len(), 1);
        assert_eq!(edge_pairs(&s.columns[0]), vec![(0, 0), (1, 1), (2, 2), (3, 3)]);
        assert_eq!(s.columns[0].gate_label, "cnot(1,0)·cnot(1,0)");
    }

    #[test]
    fn msb_unitary_expands_to_swap_conjugation() {
        let u = [[c(0.6, 0.0), c(0.8, 0.0)], [c(-0.8, 0.0), c(0.6, 0.0)]];
        let circuit = Circuit::from_gates(2, vec![GateSpec::u1q(1, u)]).unwrap();
        let plus = StateVector::renormalized(vec![c(0.5, 0.0); 4], 1e-9).unwrap();
        let expanded = compile_diagram_with(
            &circuit,
            &plus,
            CompileOptions {
                annotate_entanglement: false,
                expand_msb_unitary: true,
            },
        )
        .unwrap();
        assert_eq!(expanded.columns.len(), 3);
        assert_eq!(expanded.columns[0].gate_label, "swap(0,1)");
        assert_eq!(expanded.columns[1].gate_label, "u1q(0)");
        let out = resimulate(&expanded, &plus).unwrap();
        let direct = circuit.simulate(&plus).unwrap();
        assert!(out.max_abs_diff(&direct) <= 1e-12);
    }

    #[test]
    fn nine_qubit_compile_is_rejected_by_the_dimension_guard() {
        assert!(Circuit::new(9).is_err());
    }
}
