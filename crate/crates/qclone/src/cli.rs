//! Command-line front end.
//!
//! Subcommands: `simulate`, `diagram`, `gn`, `bh`, `sweep`, `synth`,
//! `gates`. Data goes to stdout (or the requested file), diagnostics to
//! stderr. Exit codes: 0 on success, 1 for usage or parse errors, 2 for
//! domain errors. Every number is printed through [`crate::fmt`], so all
//! output is deterministic; the report builders in this module are plain
//! functions over library values and are reused by the test suite.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::diagram::{compile_diagram_with, render_ascii, render_svg, simplify_diagram, CompileOptions};
use crate::error::{Error, Result};
use crate::fmt::{format_complex, format_real, format_sig, parse_complex};
use crate::gates::{build_gate_matrix, catalog_permutation_gates};
use crate::linalg::StateVector;
use crate::machines::{
    bh_run, gn_bloch_maps, gn_run, solve_synthesis, sweep_equatorial, sweep_symmetric,
    synth_circuit, BhRun, BlochMap, ControlState, EquatorialSweepRow, GnParams, GnTrace,
    SymmetricSweepRow,
};
use crate::script::{parse_script, print_script, ParsedScript};

#[derive(Parser)]
#[command(
    name = "qclone",
    about = "Simulate small quantum circuits, analyze the Griffiths-Niu and Buzek-Hillery copying machines, and render diagrams of states",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DiagramFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepMachine {
    BhSym,
    BhEq,
}

#[derive(Debug, Args)]
struct InputQubit {
    /// Input amplitude of |0⟩ (complex literal, e.g. 0.6 or 0.6+0.2i).
    #[arg(long, default_value = "1")]
    a: String,
    /// Input amplitude of |1⟩.
    #[arg(long, default_value = "0")]
    b: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a circuit script and print amplitudes plus per-qubit Bloch vectors.
    Simulate {
        script: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
    },
    /// Compile a circuit script to a diagram of states.
    Diagram {
        script: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        format: DiagramFormat,
        /// Drop amplitude-free edges and merge permutation columns.
        #[arg(long)]
        simplify: bool,
        /// Mark each column product/entangled (two-qubit scripts only).
        #[arg(long)]
        annotate: bool,
        /// Draw unitaries on the most significant bit as swap-conjugated
        /// unitaries on the least significant bit.
        #[arg(long)]
        expand_msb: bool,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full Griffiths-Niu analysis: intermediate states, reduced density
    /// matrices, Bloch maps, entanglement flags.
    Gn {
        #[arg(long)]
        theta0: f64,
        #[arg(long)]
        theta1: f64,
        #[command(flatten)]
        input: InputQubit,
    },
    /// Buzek-Hillery analysis for a control state chosen symmetrically
    /// (--sym), equatorially (--eq) or given raw (--raw a,b,g,d).
    Bh {
        /// Symmetric case: free parameter alpha in [1/sqrt(2), sqrt(2/3)].
        #[arg(long, group = "mode")]
        sym: Option<f64>,
        /// Equatorial case: Eve's shrink factor S_E in [0, 1].
        #[arg(long, group = "mode")]
        eq: Option<f64>,
        /// Raw normalized control state alpha,beta,gamma,delta.
        #[arg(long, group = "mode")]
        raw: Option<String>,
        #[command(flatten)]
        input: InputQubit,
    },
    /// Write sweep tables (CSV, optional SVG plot) for the Buzek-Hillery
    /// parameter families.
    Sweep {
        #[arg(long, value_enum)]
        machine: SweepMachine,
        #[arg(long, default_value_t = 50)]
        steps: usize,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Solve the control-state synthesis angles and emit the circuit script.
    Synth {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        delta: f64,
        /// Also write the synthesis circuit's diagram of states.
        #[arg(long)]
        diagram_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "ascii")]
        diagram_format: DiagramFormat,
    },
    /// Print the elementary gate catalog matrices.
    Gates,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> i32 {
    match Cli::try_parse() {
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{e}");
                0
            }
            _ => {
                eprint!("{e}");
                1
            }
        },
        Ok(cli) => match execute(cli.command) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
    }
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Simulate { script, format } => {
            let parsed = load_script(&script)?;
            let report = match format {
                OutputFormat::Csv => simulate_report_csv(&parsed)?,
                OutputFormat::Json => simulate_report_json(&parsed)?,
            };
            print!("{report}");
            Ok(())
        }
        Command::Diagram {
            script,
            format,
            simplify,
            annotate,
            expand_msb,
            out,
        } => {
            let parsed = load_script(&script)?;
            let rendered = diagram_output(&parsed, format, simplify, annotate, expand_msb)?;
            emit(out.as_deref(), &rendered)
        }
        Command::Gn {
            theta0,
            theta1,
            input,
        } => {
            let (a, b) = input.parse()?;
            let report = gn_report(&GnParams::new(theta0, theta1), a, b)?;
            print!("{report}");
            Ok(())
        }
        Command::Bh {
            sym,
            eq,
            raw,
            input,
        } => {
            let (a, b) = input.parse()?;
            let mode = BhMode::from_flags(sym, eq, raw.as_deref())?;
            let report = bh_report(&mode, a, b)?;
            print!("{report}");
            Ok(())
        }
        Command::Sweep {
            machine,
            steps,
            csv,
            svg,
        } => {
            let (csv_text, svg_text) = match machine {
                SweepMachine::BhSym => {
                    let rows = sweep_symmetric(steps)?;
                    (symmetric_sweep_csv(&rows), symmetric_sweep_svg(&rows))
                }
                SweepMachine::BhEq => {
                    let rows = sweep_equatorial(steps)?;
                    (equatorial_sweep_csv(&rows), equatorial_sweep_svg(&rows))
                }
            };
            std::fs::write(&csv, csv_text)?;
            if let Some(svg_path) = svg {
                std::fs::write(&svg_path, svg_text)?;
            }
            Ok(())
        }
        Command::Synth {
            alpha,
            beta,
            gamma,
            delta,
            diagram_out,
            diagram_format,
        } => {
            let control = ControlState::new(alpha, beta, gamma, delta)?;
            let report = synth_report(&control)?;
            print!("{report}");
            if let Some(path) = diagram_out {
                let angles = solve_synthesis(&control);
                let circuit = synth_circuit(&angles)?;
                let script = ParsedScript {
                    initial: StateVector::basis(2, 0)?,
                    circuit,
                };
                let rendered = diagram_output(&script, diagram_format, false, false, false)?;
                std::fs::write(path, rendered)?;
            }
            Ok(())
        }
        Command::Gates => {
            print!("{}", gates_report());
            Ok(())
        }
    }
}

impl InputQubit {
    fn parse(&self) -> Result<(Complex64, Complex64)> {
        let a = parse_complex(&self.a).map_err(Error::BadArgument)?;
        let b = parse_complex(&self.b).map_err(Error::BadArgument)?;
        // Accept qubit amplitudes quoted to ~9 digits; snap onto the sphere.
        let norm_sq = a.norm_sqr() + b.norm_sqr();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > 1e-9 {
            return Err(Error::NotNormalized {
                norm: norm_sq.sqrt(),
            });
        }
        let scale = 1.0 / norm_sq.sqrt();
        if (norm_sq - 1.0).abs() <= crate::linalg::ALGEBRA_TOL {
            Ok((a, b))
        } else {
            Ok((a * scale, b * scale))
        }
    }
}

fn load_script(path: &Path) -> Result<ParsedScript> {
    let src = std::fs::read_to_string(path)?;
    parse_script(&src)
}

fn emit(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content)?;
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn diagram_output(
    script: &ParsedScript,
    format: DiagramFormat,
    simplify: bool,
    annotate: bool,
    expand_msb: bool,
) -> Result<String> {
    let options = CompileOptions {
        annotate_entanglement: annotate,
        expand_msb_unitary: expand_msb,
    };
    let mut diagram = compile_diagram_with(&script.circuit, &script.initial, options)?;
    if simplify {
        diagram = simplify_diagram(&diagram);
    }
    match format {
        DiagramFormat::Ascii => render_ascii(&diagram),
        DiagramFormat::Svg => render_svg(&diagram),
    }
}

fn per_qubit_bloch(script: &ParsedScript, state: &StateVector) -> Result<Vec<(usize, f64, f64, f64)>> {
    let n = script.circuit.n_qubits();
    let mut rows = Vec::with_capacity(n);
    if n == 1 {
        let b = DensityMatrix::from_state(state).bloch()?;
        rows.push((0, b.x, b.y, b.z));
        return Ok(rows);
    }
    let rho = DensityMatrix::from_state(state);
    for qubit in 0..n {
        let traced: Vec<usize> = (0..n).filter(|&q| q != qubit).collect();
        let b = rho.partial_trace(&traced)?.bloch()?;
        rows.push((qubit, b.x, b.y, b.z));
    }
    Ok(rows)
}

/// `simulate` as CSV: an amplitude table and a Bloch table separated by a
/// blank line.
pub fn simulate_report_csv(script: &ParsedScript) -> Result<String> {
    let state = script.circuit.simulate(&script.initial)?;
    let n = script.circuit.n_qubits();
    let mut out = String::from("index,basis,re,im\n");
    for i in 0..state.dim() {
        let z = state.amplitude(i);
        out.push_str(&format!(
            "{i},{:0n$b},{},{}\n",
            i,
            format_real(z.re),
            format_real(z.im)
        ));
    }
    out.push('\n');
    out.push_str("qubit,x,y,z\n");
    for (qubit, x, y, z) in per_qubit_bloch(script, &state)? {
        out.push_str(&format!(
            "{qubit},{},{},{}\n",
            format_real(x),
            format_real(y),
            format_real(z)
        ));
    }
    Ok(out)
}

/// `simulate` as JSON with fixed key order (built by hand so number
/// formatting matches the CSV output digit for digit).
pub fn simulate_report_json(script: &ParsedScript) -> Result<String> {
    let state = script.circuit.simulate(&script.initial)?;
    let n = script.circuit.n_qubits();
    let mut out = format!("{{\"n_qubits\":{n},\"amplitudes\":[");
    for i in 0..state.dim() {
        if i > 0 {
            out.push(',');
        }
        let z = state.amplitude(i);
        out.push_str(&format!(
            "{{\"index\":{i},\"basis\":\"{:0n$b}\",\"re\":{},\"im\":{}}}",
            i,
            format_real(z.re),
            format_real(z.im)
        ));
    }
    out.push_str("],\"bloch\":[");
    for (k, (qubit, x, y, z)) in per_qubit_bloch(script, &state)?.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&format!(
            "{{\"qubit\":{qubit},\"x\":{},\"y\":{},\"z\":{}}}",
            format_real(*x),
            format_real(*y),
            format_real(*z)
        ));
    }
    out.push_str("]}\n");
    Ok(out)
}

fn matrix_line(rho: &DensityMatrix) -> String {
    let rows: Vec<String> = (0..rho.dim())
        .map(|r| {
            let cols: Vec<String> = (0..rho.dim())
                .map(|c| format_complex(rho.entry(r, c)))
                .collect();
            format!("[{}]", cols.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn state_block(label: &str, state: &StateVector, flag: &str, indent: &str) -> String {
    let mut out = format!("{label} [{flag}]:\n");
    let n = state.n_qubits();
    for i in 0..state.dim() {
        out.push_str(&format!(
            "{indent}{:0n$b}: {}\n",
            i,
            format_complex(state.amplitude(i))
        ));
    }
    out
}

fn bloch_map_line(map: &BlochMap) -> String {
    format!(
        "x' = {} x ; y' = {} y ; z' = {} + {} z",
        format_real(map.x_scale),
        format_real(map.y_scale),
        format_real(map.z_offset),
        format_real(map.z_scale)
    )
}

/// Full Griffiths-Niu report: the six states with entanglement flags, the
/// stage 2-5 reduced matrices, and both closed-form Bloch maps.
pub fn gn_report(params: &GnParams, a: Complex64, b: Complex64) -> Result<String> {
    let trace: GnTrace = gn_run(params, a, b)?;
    let mut out = String::from("griffiths-niu machine\n");
    out.push_str(&format!(
        "theta0 = {} ; theta1 = {} ; alpha = {} ; beta = {}\n",
        format_real(params.theta0),
        format_real(params.theta1),
        format_real(params.angle_sum()),
        format_real(params.angle_diff())
    ));
    out.push_str(&format!(
        "input: a = {} ; b = {}\n\n",
        format_complex(a),
        format_complex(b)
    ));
    for (stage, state) in trace.states.iter().enumerate() {
        let flag = if crate::density::is_product_2q(state, crate::density::PRODUCT_TOL)? {
            "product"
        } else {
            "entangled"
        };
        out.push_str(&state_block(&format!("psi_{stage}"), state, flag, "  "));
    }
    out.push('\n');
    for stage in 2..=5 {
        out.push_str(&format!(
            "stage {stage}: rho_bob = {} ; rho_eve = {}\n",
            matrix_line(trace.rho_bob(stage)),
            matrix_line(trace.rho_eve(stage))
        ));
    }
    let (bob_map, eve_map) = gn_bloch_maps(params);
    out.push_str(&format!("bloch map (bob): {}\n", bloch_map_line(&bob_map)));
    out.push_str(&format!("bloch map (eve): {}\n", bloch_map_line(&eve_map)));
    Ok(out)
}

/// How the Buzek-Hillery control state was chosen.
#[derive(Debug, Clone, PartialEq)]
pub enum BhMode {
    Symmetric { alpha: f64 },
    Equatorial { s_eve: f64 },
    Raw(ControlState),
}

impl BhMode {
    fn from_flags(sym: Option<f64>, eq: Option<f64>, raw: Option<&str>) -> Result<Self> {
        match (sym, eq, raw) {
            (Some(alpha), None, None) => Ok(BhMode::Symmetric { alpha }),
            (None, Some(s_eve), None) => Ok(BhMode::Equatorial { s_eve }),
            (None, None, Some(text)) => {
                let parts: Vec<&str> = text.split(',').collect();
                if parts.len() != 4 {
                    return Err(Error::BadArgument(
                        "--raw needs alpha,beta,gamma,delta".to_string(),
                    ));
                }
                let mut vals = [0.0; 4];
                for (k, part) in parts.iter().enumerate() {
                    vals[k] = part
                        .trim()
                        .parse::<f64>()
                        .map_err(|_| Error::BadArgument(format!("bad real number `{part}`")))?;
                }
                Ok(BhMode::Raw(ControlState::new(
                    vals[0], vals[1], vals[2], vals[3],
                )?))
            }
            _ => Err(Error::BadArgument(
                "choose exactly one of --sym, --eq, --raw".to_string(),
            )),
        }
    }
}

/// Buzek-Hillery report: the control state, the shrink coefficients
/// `S_B = 2αδ`, `S_E = 2αγ` with their `(1+S)/2` fidelities, the actual
/// fidelities of both copies against the input, and all three reduced
/// density matrices.
pub fn bh_report(mode: &BhMode, a: Complex64, b: Complex64) -> Result<String> {
    let (control, s_bob, s_eve, header) = match mode {
        BhMode::Symmetric { alpha } => {
            let (control, factors) = crate::machines::bh_symmetric_params(*alpha)?;
            (
                control,
                factors.s_bob,
                factors.s_eve,
                format!("mode: symmetric alpha = {}", format_real(*alpha)),
            )
        }
        BhMode::Equatorial { s_eve } => {
            let (control, s_bob) = crate::machines::bh_equatorial_params(*s_eve)?;
            (
                control,
                s_bob,
                s_eve.clamp(0.0, 1.0),
                format!("mode: equatorial s_eve = {}", format_real(*s_eve)),
            )
        }
        BhMode::Raw(control) => (
            *control,
            2.0 * control.alpha * control.delta,
            2.0 * control.alpha * control.gamma,
            "mode: raw control state".to_string(),
        ),
    };
    let run: BhRun = bh_run(&control, a, b)?;
    let input = StateVector::qubit(a, b)?;

    let mut out = format!("buzek-hillery machine ({header})\n");
    out.push_str(&format!(
        "control: alpha = {} ; beta = {} ; gamma = {} ; delta = {}\n",
        format_real(control.alpha),
        format_real(control.beta),
        format_real(control.gamma),
        format_real(control.delta)
    ));
    out.push_str(&format!(
        "input: a = {} ; b = {}\n",
        format_complex(a),
        format_complex(b)
    ));
    out.push_str(&format!("s_bob = {}\n", format_real(s_bob)));
    out.push_str(&format!("s_eve = {}\n", format_real(s_eve)));
    out.push_str(&format!(
        "f_bob (1+s)/2 = {}\n",
        format_real((1.0 + s_bob) / 2.0)
    ));
    out.push_str(&format!(
        "f_eve (1+s)/2 = {}\n",
        format_real((1.0 + s_eve) / 2.0)
    ));
    out.push_str(&format!(
        "f_bob vs input = {}\n",
        format_real(run.rho_bob.fidelity_pure(&input)?)
    ));
    out.push_str(&format!(
        "f_eve vs input = {}\n",
        format_real(run.rho_eve.fidelity_pure(&input)?)
    ));
    out.push_str(&format!("rho_bob = {}\n", matrix_line(&run.rho_bob)));
    out.push_str(&format!("rho_eve = {}\n", matrix_line(&run.rho_eve)));
    out.push_str(&format!("rho_anc = {}\n", matrix_line(&run.rho_anc)));
    Ok(out)
}

/// Synthesis report: the three angles, a note on the θ₂ gate, the circuit
/// script, and the round-trip error of re-simulating that script.
pub fn synth_report(control: &ControlState) -> Result<String> {
    let angles = solve_synthesis(control);
    let circuit = synth_circuit(&angles)?;
    let script = ParsedScript {
        initial: StateVector::basis(2, 0)?,
        circuit,
    };
    let reached = script.circuit.simulate(&script.initial)?;
    let error = reached.max_abs_diff(&control.to_state());

    let mut out = String::from("control-state synthesis\n");
    out.push_str(&format!(
        "control: alpha = {} ; beta = {} ; gamma = {} ; delta = {}\n",
        format_real(control.alpha),
        format_real(control.beta),
        format_real(control.gamma),
        format_real(control.delta)
    ));
    out.push_str(&format!(
        "theta1 = {} ; theta2 = {} ; theta3 = {}\n",
        format_real(angles.theta1),
        format_real(angles.theta2),
        format_real(angles.theta3)
    ));
    if angles.theta2 == 0.0 {
        out.push_str("controlled-theta2 gate: absent (beta = 0)\n");
    } else {
        out.push_str("controlled-theta2 gate: present\n");
    }
    if script.circuit.gates().is_empty() {
        out.push_str("circuit: identity (no gates)\n");
    }
    out.push_str("script:\n");
    out.push_str(&print_script(&script));
    out.push_str(&format!("roundtrip max error = {}\n", format_real(error)));
    Ok(out)
}

/// CSV for the symmetric sweep: `alpha,s_bob,s_eve,f_bob,f_eve`.
pub fn symmetric_sweep_csv(rows: &[SymmetricSweepRow]) -> String {
    let mut out = String::from("alpha,s_bob,s_eve,f_bob,f_eve\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            format_real(row.alpha),
            format_real(row.s_bob),
            format_real(row.s_eve),
            format_real(row.f_bob),
            format_real(row.f_eve)
        ));
    }
    out
}

/// CSV for the equatorial sweep: `s_eve,s_bob,alpha`.
pub fn equatorial_sweep_csv(rows: &[EquatorialSweepRow]) -> String {
    let mut out = String::from("s_eve,s_bob,alpha\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            format_real(row.s_eve),
            format_real(row.s_bob),
            format_real(row.alpha)
        ));
    }
    out
}

const PLOT_W: f64 = 480.0;
const PLOT_H: f64 = 360.0;
const PLOT_ML: f64 = 56.0;
const PLOT_MB: f64 = 44.0;
const PLOT_MT: f64 = 20.0;
const PLOT_MR: f64 = 20.0;

struct Plot {
    out: String,
    x_min: f64,
    x_max: f64,
}

impl Plot {
    fn new(x_min: f64, x_max: f64, x_label: &str, y_label: &str) -> Self {
        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
            format_sig(PLOT_W, 6),
            format_sig(PLOT_H, 6),
            format_sig(PLOT_W, 6),
            format_sig(PLOT_H, 6)
        ));
        out.push_str(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#000\" stroke-width=\"1\"/>\n",
            format_sig(PLOT_ML, 6),
            format_sig(PLOT_MT, 6),
            format_sig(PLOT_W - PLOT_ML - PLOT_MR, 6),
            format_sig(PLOT_H - PLOT_MT - PLOT_MB, 6)
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" fill=\"#000\">{}</text>\n",
            format_sig((PLOT_ML + PLOT_W - PLOT_MR) / 2.0, 6),
            format_sig(PLOT_H - 12.0, 6),
            x_label
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"start\" fill=\"#000\">{}</text>\n",
            format_sig(6.0, 6),
            format_sig(PLOT_MT - 6.0, 6),
            y_label
        ));
        Plot { out, x_min, x_max }
    }

    fn x(&self, v: f64) -> f64 {
        PLOT_ML + (v - self.x_min) / (self.x_max - self.x_min) * (PLOT_W - PLOT_ML - PLOT_MR)
    }

    fn y(&self, v: f64) -> f64 {
        // Values live in [0, 1].
        PLOT_H - PLOT_MB - v * (PLOT_H - PLOT_MT - PLOT_MB)
    }

    fn series(&mut self, points: impl Iterator<Item = (f64, f64)>, width: f64, label: &str) {
        let pts: Vec<(f64, f64)> = points.collect();
        for pair in pts.windows(2) {
            self.out.push_str(&format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000\" stroke-width=\"{}\"/>\n",
                format_sig(self.x(pair[0].0), 6),
                format_sig(self.y(pair[0].1), 6),
                format_sig(self.x(pair[1].0), 6),
                format_sig(self.y(pair[1].1), 6),
                format_sig(width, 6)
            ));
        }
        if let Some(&(x, y)) = pts.last() {
            self.out.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\" fill=\"#000\">{}</text>\n",
                format_sig(self.x(x) - 4.0, 6),
                format_sig(self.y(y) - 5.0, 6),
                label
            ));
        }
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

/// Line plot of `S_B` and `S_E` against α (values on [0, 1]).
pub fn symmetric_sweep_svg(rows: &[SymmetricSweepRow]) -> String {
    let x_min = rows.first().map_or(0.0, |r| r.alpha);
    let x_max = rows.last().map_or(1.0, |r| r.alpha);
    let mut plot = Plot::new(x_min, x_max, "alpha", "s");
    plot.series(rows.iter().map(|r| (r.alpha, r.s_bob)), 2.2, "s_bob");
    plot.series(rows.iter().map(|r| (r.alpha, r.s_eve)), 1.1, "s_eve");
    plot.finish()
}

/// Quarter-circle plot of `S_B` against `S_E`.
pub fn equatorial_sweep_svg(rows: &[EquatorialSweepRow]) -> String {
    let mut plot = Plot::new(0.0, 1.0, "s_eve", "s_bob");
    plot.series(rows.iter().map(|r| (r.s_eve, r.s_bob)), 2.2, "s_bob");
    plot.finish()
}

/// The elementary gate catalog: the single-qubit diagrams, then the nine
/// two-qubit diagrams in catalog order with their matrices (the two
/// unitary embeddings are shown with symbolic entries).
pub fn gates_report() -> String {
    let mut out = String::from("elementary diagrams of states: gate catalog\n\n");
    out.push_str("single-qubit:\n");
    out.push_str("1. not: [[0, 1], [1, 0]]\n");
    out.push_str("2. unitary: [[u00, u01], [u10, u11]]\n\n");
    out.push_str("two-qubit:\n");
    let symbolic_lsb = "[[u00, u01, 0, 0], [u10, u11, 0, 0], [0, 0, u00, u01], [0, 0, u10, u11]]";
    let symbolic_msb = "[[u00, 0, u01, 0], [0, u00, 0, u01], [u10, 0, u11, 0], [0, u10, 0, u11]]";
    let catalog = catalog_permutation_gates();
    let mut items: Vec<(String, String)> = Vec::new();
    for (label, spec) in &catalog[..2] {
        let m = build_gate_matrix(spec, 2).expect("catalog gate");
        items.push((label.to_string(), matrix_text(&m)));
    }
    items.push(("unitary on lsb".to_string(), symbolic_lsb.to_string()));
    items.push((catalog[2].0.to_string(), {
        let m = build_gate_matrix(&catalog[2].1, 2).expect("catalog gate");
        matrix_text(&m)
    }));
    items.push(("unitary on msb".to_string(), symbolic_msb.to_string()));
    for (label, spec) in &catalog[3..] {
        let m = build_gate_matrix(spec, 2).expect("catalog gate");
        items.push((label.to_string(), matrix_text(&m)));
    }
    for (k, (label, matrix)) in items.iter().enumerate() {
        out.push_str(&format!("{}. {label}: {matrix}\n", k + 1));
    }
    out
}

fn matrix_text(m: &crate::linalg::UnitaryMatrix) -> String {
    let rows: Vec<String> = (0..m.dim())
        .map(|r| {
            let cols: Vec<String> = (0..m.dim())
                .map(|c| format_complex(m.entry(r, c)))
                .collect();
            format!("[{}]", cols.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn simulate_not_gate_report() {
        let script = parse_script("qubits 1\nnot 0\n").unwrap();
        let csv = simulate_report_csv(&script).unwrap();
        assert_eq!(
            csv,
            "index,basis,re,im\n0,0,0,0\n1,1,1,0\n\nqubit,x,y,z\n0,0,0,-1\n"
        );
        let json = simulate_report_json(&script).unwrap();
        assert!(json.contains("\"bloch\":[{\"qubit\":0,\"x\":0,\"y\":0,\"z\":-1}]"));
        assert!(json.starts_with("{\"n_qubits\":1,"));
    }

    #[test]
    #[allow(clippy::approx_constant)] // the 8-digit literal is the point
    fn bh_symmetric_report_carries_library_values() {
        let report = bh_report(
            &BhMode::Symmetric { alpha: 0.70710678 },
            c(1.0, 0.0),
            c(0.0, 0.0),
        )
        .unwrap();
        assert!(report.contains("s_bob = 1\n"), "{report}");
        assert!(report.contains("f_bob (1+s)/2 = 1\n"));
        assert!(report.contains("f_bob vs input = 1\n"));
    }

    #[test]
    fn bh_equatorial_report_circle_values() {
        let report = bh_report(&BhMode::Equatorial { s_eve: 0.6 }, c(1.0, 0.0), c(0.0, 0.0))
            .unwrap();
        assert!(report.contains("s_bob = 0.8\n"), "{report}");
        assert!(report.contains("f_bob (1+s)/2 = 0.9\n"));
        assert!(report.contains("f_eve (1+s)/2 = 0.8\n"));
    }

    #[test]
    fn bh_raw_identity_control_transmits_basis_input() {
        let mode = BhMode::from_flags(None, None, Some("1,0,0,0")).unwrap();
        let report = bh_report(&mode, c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!(report.contains("f_bob vs input = 1\n"), "{report}");
    }

    #[test]
    fn bh_mode_flag_validation() {
        assert!(BhMode::from_flags(None, None, None).is_err());
        assert!(BhMode::from_flags(None, None, Some("1,0,0")).is_err());
        assert!(BhMode::from_flags(None, None, Some("1,0,0,x")).is_err());
    }

    #[test]
    fn gn_report_mentions_every_stage() {
        let report = gn_report(&GnParams::new(0.7, 0.3), c(0.6, 0.0), c(0.8, 0.0)).unwrap();
        for stage in 0..=5 {
            assert!(report.contains(&format!("psi_{stage}")));
        }
        for stage in 2..=5 {
            assert!(report.contains(&format!("stage {stage}:")));
        }
        assert!(report.contains("bloch map (bob)"));
        assert!(report.contains("[product]"));
        assert!(report.contains("[entangled]"));
    }

    #[test]
    fn synth_report_trivial_control() {
        let control = ControlState::new(1.0, 0.0, 0.0, 0.0).unwrap();
        let report = synth_report(&control).unwrap();
        assert!(report.contains("theta1 = 0 ; theta2 = 0 ; theta3 = 0"));
        assert!(report.contains("controlled-theta2 gate: absent"));
        assert!(report.contains("circuit: identity (no gates)"));
        assert!(report.contains("roundtrip max error = 0"));
    }

    #[test]
    fn sweep_csvs_have_pinned_headers() {
        let sym = symmetric_sweep_csv(&sweep_symmetric(2).unwrap());
        assert!(sym.starts_with("alpha,s_bob,s_eve,f_bob,f_eve\n"));
        assert_eq!(sym.lines().count(), 3);
        let eq = equatorial_sweep_csv(&sweep_equatorial(2).unwrap());
        assert!(eq.starts_with("s_eve,s_bob,alpha\n"));
        assert!(eq.ends_with("1,0,0.707106781187\n"));
    }

    #[test]
    fn gates_report_lists_all_eleven_items() {
        let report = gates_report();
        assert!(report.contains("1. not on lsb"));
        assert!(report.contains("3. unitary on lsb"));
        assert!(report.contains("5. unitary on msb"));
        assert!(report.contains("9. c-not-r-bar"));
        // One u00 in the single-qubit item, two in each embedding.
        assert_eq!(report.matches("u00").count(), 5);
    }

    #[test]
    fn input_qubit_parsing() {
        let input = InputQubit {
            a: "0.6".into(),
            b: "0.8i".into(),
        };
        let (a, b) = input.parse().unwrap();
        assert_eq!(a, c(0.6, 0.0));
        assert_eq!(b, c(0.0, 0.8));
        let bad = InputQubit {
            a: "1".into(),
            b: "1".into(),
        };
        assert!(matches!(bad.parse(), Err(Error::NotNormalized { .. })));
        let malformed = InputQubit {
            a: "xyz".into(),
            b: "0".into(),
        };
        assert!(matches!(malformed.parse(), Err(Error::BadArgument(_))));
    }
}
