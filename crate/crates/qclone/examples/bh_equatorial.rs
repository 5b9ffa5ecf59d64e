//! The equatorial (four-state protocol) case: with only X and Y to
//! reproduce, the copies trade quality along the circle
//! s_bob² + s_eve² = 1, always at alpha = 1/sqrt(2).
//!
//! Run with: cargo run --example bh_equatorial

use qclone::fmt::format_real;
use qclone::machines::{bh_equatorial_params, sweep_equatorial};

fn main() {
    println!("=== Buzek-Hillery, equatorial (four-state protocol) case ===\n");
    println!("s_eve          s_bob          s_bob^2 + s_eve^2");
    for row in sweep_equatorial(11).unwrap() {
        let circle = row.s_bob * row.s_bob + row.s_eve * row.s_eve;
        println!(
            "{:<14} {:<14} {}",
            format_real(row.s_eve),
            format_real(row.s_bob),
            format_real(circle)
        );
    }

    let (control, s_bob) = bh_equatorial_params(0.6).unwrap();
    println!("\nOptimal control state for s_eve = 0.6 (s_bob = {}):", format_real(s_bob));
    println!(
        "  (alpha, beta, gamma, delta) = ({}, {}, {}, {})",
        format_real(control.alpha),
        format_real(control.beta),
        format_real(control.gamma),
        format_real(control.delta)
    );
    println!("  equatorial fidelities: f_bob = {}, f_eve = {}",
        format_real((1.0 + s_bob) / 2.0),
        format_real((1.0 + 0.6) / 2.0)
    );
}
