//! Exact simulation and visual analysis of small quantum circuits, built
//! around two quantum copying machines and the diagram-of-states picture
//! of their operation.
//!
//! A state vector over `n ≤ 8` qubits evolves under explicit dense
//! unitaries ([`linalg`], [`gates`]); reduced density matrices, Bloch
//! coordinates and fidelities come from [`density`]. The [`machines`]
//! module implements the Griffiths-Niu two-qubit cloner and the
//! Buzek-Hillery three-qubit cloner with their parameter solvers, and
//! [`diagram`] compiles any circuit into a diagram of states — one line
//! per basis state, one column per gate, crossings labeled by matrix
//! entries — rendered deterministically as text or SVG. A line-oriented
//! script format ([`script`]) and a command-line front end ([`cli`]) wrap
//! the library; see the `examples/` directory for one runnable example per
//! capability.
//!
//! Diagrams carry one line per basis state, so they grow as `2^n`; the
//! eight-qubit cap keeps that explicit cost within desk scale.
//!
//! ```
//! use num_complex::Complex64;
//! use qclone::machines::{bh_run, bh_symmetric_params, symmetric_alpha_max};
//!
//! // Clone symmetrically: both copies shrink the Bloch vector by 2/3.
//! let (control, factors) = bh_symmetric_params(symmetric_alpha_max()).unwrap();
//! let run = bh_run(&control, Complex64::new(0.6, 0.0), Complex64::new(0.8, 0.0)).unwrap();
//! let bob = run.rho_bob.bloch().unwrap();
//! assert!((bob.x - factors.s_bob * 0.96).abs() < 1e-12);
//! ```

pub mod cli;
pub mod density;
pub mod diagram;
pub mod error;
pub mod fmt;
pub mod gates;
pub mod linalg;
pub mod machines;
pub mod script;

pub use density::{is_product_2q, BlochVector, DensityMatrix};
pub use error::{Error, Result};
pub use gates::{build_gate_matrix, Circuit, GateKind, GateSpec};
pub use linalg::{check_unitary, compose, StateVector, UnitaryMatrix};
