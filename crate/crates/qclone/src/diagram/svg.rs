//! Deterministic SVG rendering of a diagram of states.
//!
//! Output is a fixed-order SVG 1.1 subset — `line`, `text` and `rect`
//! elements only — with coordinates printed to six significant digits and
//! no timestamps, so identical diagrams render to identical bytes.

use crate::error::{Error, Result};
use crate::fmt::format_sig;

use super::Diagram;

pub const SVG_MAX_STATES: usize = 256;

const ROW_H: f64 = 26.0;
const COL_W: f64 = 120.0;
const RAIL_W: f64 = 36.0;
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_RIGHT: f64 = 24.0;
const HEAVY: f64 = 2.6;
const LIGHT: f64 = 0.9;

fn num(x: f64) -> String {
    format_sig(x, 6)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn line(out: &mut String, x1: f64, y1: f64, x2: f64, y2: f64, width: f64) {
    out.push_str(&format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000\" stroke-width=\"{}\"/>\n",
        num(x1),
        num(y1),
        num(x2),
        num(y2),
        num(width)
    ));
}

fn text(out: &mut String, x: f64, y: f64, size: f64, anchor: &str, body: &str) {
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"{}\" text-anchor=\"{}\" fill=\"#000\">{}</text>\n",
        num(x),
        num(y),
        num(size),
        anchor,
        escape(body)
    ));
}

pub fn render_svg(d: &Diagram) -> Result<String> {
    if d.n_states > SVG_MAX_STATES {
        return Err(Error::RenderLimit {
            states: d.n_states,
            max: SVG_MAX_STATES,
        });
    }
    let annotated = d.columns.iter().any(|c| c.entangled_after.is_some());
    let margin_bottom = if annotated { 52.0 } else { 24.0 };
    let n_cols = d.columns.len();
    let width = MARGIN_LEFT + RAIL_W + n_cols as f64 * (COL_W + RAIL_W) + MARGIN_RIGHT;
    let height = MARGIN_TOP + d.n_states as f64 * ROW_H + margin_bottom;
    let y_of = |row: usize| MARGIN_TOP + (row as f64 + 0.5) * ROW_H;
    let x_in = |col: usize| MARGIN_LEFT + RAIL_W + col as f64 * (COL_W + RAIL_W);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        num(width),
        num(height),
        num(width),
        num(height)
    ));

    for (row, label) in d.state_labels.iter().enumerate() {
        text(&mut out, MARGIN_LEFT - 8.0, y_of(row) + 4.0, 12.0, "end", label);
    }

    // Rails between column boundaries, weighted by amplitude presence.
    for (boundary, actives) in d.line_active.iter().enumerate() {
        let x1 = if boundary == 0 {
            MARGIN_LEFT
        } else {
            x_in(boundary - 1) + COL_W
        };
        let x2 = if boundary == n_cols {
            x1 + RAIL_W
        } else {
            x_in(boundary)
        };
        for (row, &active) in actives.iter().enumerate() {
            let w = if active { HEAVY } else { LIGHT };
            line(&mut out, x1, y_of(row), x2, y_of(row), w);
        }
    }

    for (k, column) in d.columns.iter().enumerate() {
        let x1 = x_in(k);
        let x2 = x1 + COL_W;
        text(
            &mut out,
            (x1 + x2) / 2.0,
            MARGIN_TOP - 14.0,
            12.0,
            "middle",
            &column.gate_label,
        );
        for edge in &column.edges {
            let w = if edge.emphasized { HEAVY } else { LIGHT };
            line(&mut out, x1, y_of(edge.from), x2, y_of(edge.to), w);
        }
        // Labels after all lines of the column so text sits on top.
        for edge in &column.edges {
            if edge.label.is_empty() {
                continue;
            }
            let mx = (x1 + x2) / 2.0;
            let my = (y_of(edge.from) + y_of(edge.to)) / 2.0 - 4.0;
            text(&mut out, mx, my, 10.0, "middle", &edge.label);
        }
        if let Some(entangled) = column.entangled_after {
            let cx = (x1 + x2) / 2.0;
            let top = height - margin_bottom + 12.0;
            out.push_str(&format!(
                "<rect x=\"{}\" y=\"{}\" width=\"18\" height=\"18\" fill=\"none\" stroke=\"#000\" stroke-width=\"1\"/>\n",
                num(cx - 9.0),
                num(top)
            ));
            text(
                &mut out,
                cx,
                top + 13.0,
                11.0,
                "middle",
                if entangled { "E" } else { "P" },
            );
        }
    }

    out.push_str("</svg>\n");
    Ok(out)
}
