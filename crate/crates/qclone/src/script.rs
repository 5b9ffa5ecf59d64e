//! Line-oriented circuit scripts.
//!
//! ```text
//! # comment (also allowed at end of line)
//! qubits 2
//! state 0.6, 0.8i, 0, 0        # optional; defaults to |0...0⟩
//! not 0
//! swap 0 1
//! cnot 1 0                     # control target; bar variants fire on 0
//! cnotbar 1 0
//! cnotr 0 1
//! cnotrbar 0 1
//! crot 1 theta=0.7             # rotation of qubit 1 by theta/2
//! crot 0 1 theta=0.7           # same, applied only where qubit 0 is 1
//! u1q 0 [[0.6, 0.8], [-0.8, 0.6]]
//! ```
//!
//! Complex literals are `re`, `imi` or `re±imi` (`0.5-0.5i`); whitespace
//! between tokens is free-form, but `theta=` takes its value without
//! spaces. Parse errors carry the 1-based line and column. Parsing a
//! pretty-printed script reproduces the same circuit and state; printing
//! is canonical, so print-of-parse is a fixed point.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fmt::{format_complex, format_real, parse_complex};
use crate::gates::{Circuit, GateKind, GateSpec};
use crate::linalg::{StateVector, MAX_QUBITS};

/// A parsed script: the circuit plus its initial state.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedScript {
    pub circuit: Circuit,
    pub initial: StateVector,
}

/// Squared-norm slack accepted for `state` lines; amplitudes quoted to 12
/// digits cannot hit the exact-algebra tolerance, so inputs within 1e-9
/// are rescaled onto the unit sphere.
pub const STATE_NORM_TOL: f64 = 1e-9;

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// `(column, byte_start, byte_end)` per whitespace-separated token, with
/// 1-based character columns.
fn tokenize(line: &str) -> Vec<(usize, usize, usize)> {
    let mut tokens = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut col = 0;
    for (byte, ch) in line.char_indices() {
        col += 1;
        if ch.is_whitespace() {
            if let Some((c, b)) = start.take() {
                tokens.push((c, b, byte));
            }
        } else if start.is_none() {
            start = Some((col, byte));
        }
    }
    if let Some((c, b)) = start {
        tokens.push((c, b, line.len()));
    }
    tokens
}

fn parse_index(line: usize, token: (usize, &str)) -> Result<usize> {
    token
        .1
        .parse::<usize>()
        .map_err(|_| err(line, token.0, format!("expected a qubit index, got `{}`", token.1)))
}

fn parse_matrix2(line: usize, column: usize, text: &str) -> Result<[[Complex64; 2]; 2]> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("[[")
        .and_then(|s| s.strip_suffix("]]"))
        .ok_or_else(|| err(line, column, "matrix must look like [[a,b],[c,d]]"))?;
    let rows: Vec<&str> = inner.split("],[").collect();
    if rows.len() != 2 {
        return Err(err(line, column, "matrix must have two rows"));
    }
    let mut m = [[Complex64::default(); 2]; 2];
    for (r, row) in rows.iter().enumerate() {
        let entries: Vec<&str> = row.split(',').collect();
        if entries.len() != 2 {
            return Err(err(line, column, "matrix rows must have two entries"));
        }
        for (cidx, entry) in entries.iter().enumerate() {
            m[r][cidx] = parse_complex(entry).map_err(|e| err(line, column, e))?;
        }
    }
    Ok(m)
}

pub fn parse_script(src: &str) -> Result<ParsedScript> {
    let mut n_qubits: Option<usize> = None;
    let mut circuit: Option<Circuit> = None;
    let mut initial: Option<StateVector> = None;
    let mut gates_seen = false;

    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens = tokenize(line);
        if tokens.is_empty() {
            continue;
        }
        let word = |k: usize| -> (usize, &str) {
            let (col, b, e) = tokens[k];
            (col, &line[b..e])
        };
        let (col0, head) = word(0);
        if head == "qubits" {
            if n_qubits.is_some() {
                return Err(err(line_no, col0, "duplicate qubits declaration"));
            }
            if tokens.len() != 2 {
                return Err(err(line_no, col0, "usage: qubits N"));
            }
            let n = parse_index(line_no, word(1))?;
            if n == 0 || n > MAX_QUBITS {
                return Err(err(
                    line_no,
                    word(1).0,
                    format!("qubit count must be in 1..={MAX_QUBITS}"),
                ));
            }
            n_qubits = Some(n);
            circuit = Some(Circuit::new(n).expect("range checked"));
            continue;
        }
        let n = n_qubits.ok_or_else(|| err(line_no, col0, "qubits declaration must come first"))?;
        let circuit_ref = circuit.as_mut().expect("set with n_qubits");

        if head == "state" {
            if initial.is_some() {
                return Err(err(line_no, col0, "duplicate state declaration"));
            }
            if gates_seen {
                return Err(err(line_no, col0, "state must precede gates"));
            }
            let rest_start = tokens[0].2;
            let rest = &line[rest_start..];
            let mut amps = Vec::new();
            let mut entry_col = col0 + (rest_start - tokens[0].1);
            for piece in rest.split(',') {
                let lead = piece.chars().take_while(|c| c.is_whitespace()).count();
                let z = parse_complex(piece).map_err(|e| err(line_no, entry_col + lead, e))?;
                amps.push(z);
                entry_col += piece.chars().count() + 1;
            }
            if amps.len() != 1 << n {
                return Err(err(
                    line_no,
                    col0,
                    format!("expected {} amplitudes, got {}", 1 << n, amps.len()),
                ));
            }
            let state = StateVector::renormalized(amps, STATE_NORM_TOL)
                .map_err(|e| err(line_no, col0, e.to_string()))?;
            initial = Some(state);
            continue;
        }

        let gate = match head {
            "not" => {
                if tokens.len() != 2 {
                    return Err(err(line_no, col0, "usage: not q"));
                }
                GateSpec::not(parse_index(line_no, word(1))?)
            }
            "swap" => {
                if tokens.len() != 3 {
                    return Err(err(line_no, col0, "usage: swap q0 q1"));
                }
                GateSpec::swap(parse_index(line_no, word(1))?, parse_index(line_no, word(2))?)
            }
            "cnot" | "cnotbar" | "cnotr" | "cnotrbar" => {
                if tokens.len() != 3 {
                    return Err(err(line_no, col0, format!("usage: {head} c t")));
                }
                let c = parse_index(line_no, word(1))?;
                let t = parse_index(line_no, word(2))?;
                match head {
                    "cnot" => GateSpec::cnot(c, t),
                    "cnotbar" => GateSpec::cnot_bar(c, t),
                    "cnotr" => GateSpec::cnot_r(c, t),
                    _ => GateSpec::cnot_r_bar(c, t),
                }
            }
            "crot" => {
                if tokens.len() != 3 && tokens.len() != 4 {
                    return Err(err(line_no, col0, "usage: crot [c] t theta=<rad>"));
                }
                let (theta_col, theta_tok) = word(tokens.len() - 1);
                let value = theta_tok.strip_prefix("theta=").ok_or_else(|| {
                    err(line_no, theta_col, "crot needs a trailing theta=<radians>")
                })?;
                let theta = value.parse::<f64>().map_err(|_| {
                    err(line_no, theta_col, format!("bad angle `{value}`"))
                })?;
                if tokens.len() == 3 {
                    GateSpec::crot(parse_index(line_no, word(1))?, theta)
                } else {
                    GateSpec::crot_controlled(
                        parse_index(line_no, word(1))?,
                        parse_index(line_no, word(2))?,
                        theta,
                    )
                }
            }
            "u1q" => {
                if tokens.len() < 3 {
                    return Err(err(line_no, col0, "usage: u1q t [[a,b],[c,d]]"));
                }
                let target = parse_index(line_no, word(1))?;
                let rest = &line[tokens[1].2..];
                let m = parse_matrix2(line_no, word(2).0, rest)?;
                GateSpec::u1q(target, m)
            }
            unknown => {
                return Err(err(line_no, col0, format!("unknown gate `{unknown}`")));
            }
        };
        circuit_ref
            .push(gate)
            .map_err(|e| err(line_no, col0, e.to_string()))?;
        gates_seen = true;
    }

    let circuit = circuit.ok_or_else(|| err(1, 1, "missing qubits declaration"))?;
    let n = circuit.n_qubits();
    let initial = match initial {
        Some(s) => s,
        None => StateVector::basis(n, 0).expect("n within range"),
    };
    Ok(ParsedScript { circuit, initial })
}

fn is_default_initial(state: &StateVector) -> bool {
    state.amplitude(0) == Complex64::new(1.0, 0.0)
        && (1..state.dim()).all(|i| state.amplitude(i) == Complex64::default())
}

fn print_gate(gate: &GateSpec) -> String {
    match gate.kind {
        GateKind::Not => format!("not {}", gate.target),
        GateKind::Swap => format!("swap {} {}", gate.control.expect("swap pair"), gate.target),
        GateKind::Cnot | GateKind::CnotBar | GateKind::CnotR | GateKind::CnotRBar => format!(
            "{} {} {}",
            gate.kind.name(),
            gate.control.expect("control"),
            gate.target
        ),
        GateKind::Crot => match gate.control {
            Some(c) => format!(
                "crot {} {} theta={}",
                c,
                gate.target,
                format_real(gate.angle.expect("angle"))
            ),
            None => format!(
                "crot {} theta={}",
                gate.target,
                format_real(gate.angle.expect("angle"))
            ),
        },
        GateKind::U1q => {
            let m = gate.matrix2.expect("matrix");
            format!(
                "u1q {} [[{}, {}], [{}, {}]]",
                gate.target,
                format_complex(m[0][0]),
                format_complex(m[0][1]),
                format_complex(m[1][0]),
                format_complex(m[1][1])
            )
        }
    }
}

/// Canonical text form; parsing it back yields an equal script.
pub fn print_script(script: &ParsedScript) -> String {
    let mut out = format!("qubits {}\n", script.circuit.n_qubits());
    if !is_default_initial(&script.initial) {
        let amps: Vec<String> = (0..script.initial.dim())
            .map(|i| format_complex(script.initial.amplitude(i)))
            .collect();
        out.push_str(&format!("state {}\n", amps.join(", ")));
    }
    for gate in script.circuit.gates() {
        out.push_str(&print_gate(gate));
        out.push('\n');
    }
    out
}
