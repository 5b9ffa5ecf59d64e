//! Fixed-grid text rendering of a diagram of states.
//!
//! One text row per basis state. Gate columns draw their edges with the
//! box-drawing diagonals `╱ ╲ ╳`; horizontal runs and the rails between
//! columns use `─`, switched to heavy `━` where the line carries amplitude
//! (an emphasized edge always enters and leaves horizontally, so its weight
//! stays visible even though the diagonal glyphs have no heavy variant).

use crate::error::{Error, Result};

use super::Diagram;

/// The text grid stays readable up to 16 state lines (four qubits).
pub const ASCII_MAX_STATES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Cell {
    Empty,
    Horiz { heavy: bool },
    DiagDown,
    DiagUp,
    Cross,
}

fn merge(old: Cell, new: Cell) -> Cell {
    use Cell::*;
    match (old, new) {
        (Empty, n) => n,
        (o, Empty) => o,
        (Horiz { heavy: a }, Horiz { heavy: b }) => Horiz { heavy: a || b },
        (Horiz { .. }, d @ (DiagDown | DiagUp)) => d,
        (d @ (DiagDown | DiagUp), Horiz { .. }) => d,
        (DiagDown, DiagUp) | (DiagUp, DiagDown) => Cross,
        (DiagDown, DiagDown) => DiagDown,
        (DiagUp, DiagUp) => DiagUp,
        (Cross, _) | (_, Cross) => Cross,
    }
}

fn glyph(cell: Cell) -> char {
    match cell {
        Cell::Empty => ' ',
        Cell::Horiz { heavy: false } => '─',
        Cell::Horiz { heavy: true } => '━',
        Cell::DiagDown => '╲',
        Cell::DiagUp => '╱',
        Cell::Cross => '╳',
    }
}

const RAIL_W: usize = 2;

pub fn render_ascii(d: &Diagram) -> Result<String> {
    if d.n_states > ASCII_MAX_STATES {
        return Err(Error::RenderLimit {
            states: d.n_states,
            max: ASCII_MAX_STATES,
        });
    }
    let gutter = d.n_qubits + 1;
    let col_widths: Vec<usize> = d
        .columns
        .iter()
        .map(|c| (d.n_states + 4).max(c.gate_label.chars().count() + 2))
        .collect();
    let total: usize = gutter + RAIL_W + col_widths.iter().map(|w| w + RAIL_W).sum::<usize>();
    let mut canvas = vec![vec![Cell::Empty; total]; d.n_states];

    let put = |canvas: &mut Vec<Vec<Cell>>, x: usize, y: usize, cell: Cell| {
        canvas[y][x] = merge(canvas[y][x], cell);
    };

    // Rail before the first column.
    let mut x = gutter;
    for (row, &active) in d.line_active[0].iter().enumerate() {
        for dx in 0..RAIL_W {
            put(&mut canvas, x + dx, row, Cell::Horiz { heavy: active });
        }
    }
    x += RAIL_W;

    for (k, column) in d.columns.iter().enumerate() {
        let w = col_widths[k];
        for edge in &column.edges {
            let weight = Cell::Horiz {
                heavy: edge.emphasized,
            };
            if edge.from == edge.to {
                for dx in 0..w {
                    put(&mut canvas, x + dx, edge.from, weight);
                }
                continue;
            }
            put(&mut canvas, x, edge.from, weight);
            put(&mut canvas, x + w - 1, edge.to, weight);
            let span = w - 2;
            let rows = edge.from.abs_diff(edge.to);
            let dir: isize = if edge.to > edge.from { 1 } else { -1 };
            // Column of each unit descent/ascent. The formula depends only
            // on the step fraction, so the edge i→j and its mirror j→i
            // cross inside the same cell and merge into `╳`.
            let step_cols: Vec<usize> = (1..=rows)
                .map(|s| {
                    let k = (span as f64 * (s as f64 - 0.5) / rows as f64 - 0.5).round();
                    k.clamp(0.0, span as f64 - 1.0) as usize
                })
                .collect();
            let diag = if dir > 0 { Cell::DiagDown } else { Cell::DiagUp };
            let mut y = edge.from as isize;
            let mut next_step = 0;
            for k in 0..span {
                if next_step < step_cols.len() && step_cols[next_step] == k {
                    // Mark the row being left and the row being entered so
                    // the diagonal reads as one stroke.
                    put(&mut canvas, x + 1 + k, y as usize, diag);
                    y += dir;
                    put(&mut canvas, x + 1 + k, y as usize, diag);
                    next_step += 1;
                } else {
                    put(&mut canvas, x + 1 + k, y as usize, weight);
                }
            }
        }
        x += w;
        // Rail after this column.
        for (row, &active) in d.line_active[k + 1].iter().enumerate() {
            for dx in 0..RAIL_W {
                put(&mut canvas, x + dx, row, Cell::Horiz { heavy: active });
            }
        }
        x += RAIL_W;
    }

    let centered = |label: &str, width: usize| -> String {
        let len = label.chars().count();
        let pad = width.saturating_sub(len) / 2;
        format!("{}{}", " ".repeat(pad), label)
    };

    let mut header = " ".repeat(gutter + RAIL_W);
    for (k, column) in d.columns.iter().enumerate() {
        let mut block = centered(&column.gate_label, col_widths[k]);
        let len = block.chars().count();
        if len < col_widths[k] {
            block.push_str(&" ".repeat(col_widths[k] - len));
        }
        header.push_str(&block);
        header.push_str(&" ".repeat(RAIL_W));
    }

    let mut lines = vec![header.trim_end().to_string()];
    for (row, cells) in canvas.iter().enumerate() {
        let mut line = format!("{:<gutter$}", d.state_labels[row]);
        line.extend(cells.iter().map(|&c| glyph(c)));
        lines.push(line.trim_end().to_string());
    }

    if d.columns.iter().any(|c| c.entangled_after.is_some()) {
        let mut footer = " ".repeat(gutter + RAIL_W);
        for (k, column) in d.columns.iter().enumerate() {
            let marker = match column.entangled_after {
                Some(true) => "E",
                Some(false) => "-",
                None => " ",
            };
            let mut block = centered(marker, col_widths[k]);
            let len = block.chars().count();
            if len < col_widths[k] {
                block.push_str(&" ".repeat(col_widths[k] - len));
            }
            footer.push_str(&block);
            footer.push_str(&" ".repeat(RAIL_W));
        }
        lines.push(footer.trim_end().to_string());
    }

    Ok(lines.join("\n") + "\n")
}
