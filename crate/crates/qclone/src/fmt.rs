//! Deterministic number formatting and complex-literal parsing.
//!
//! Every number the CLI or a renderer emits goes through these helpers so
//! that repeated runs produce byte-identical output. Reals are printed with
//! 12 significant digits, switching to `e` notation outside `[1e-6, 1e6)`,
//! with `-0` normalized to `0` and trailing zeros trimmed.

use num_complex::Complex64;

/// Format with `sig` significant digits. Used at 12 for CLI output and at 6
/// for SVG coordinates.
pub fn format_sig(x: f64, sig: usize) -> String {
    debug_assert!(sig >= 1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let ax = x.abs();
    if !(1e-6..1e6).contains(&ax) {
        let s = format!("{:.*e}", sig - 1, x);
        let (mantissa, exp) = s.split_once('e').expect("exponent in {:e} output");
        let mantissa = if mantissa.contains('.') {
            mantissa.trim_end_matches('0').trim_end_matches('.')
        } else {
            mantissa
        };
        format!("{mantissa}e{exp}")
    } else {
        let magnitude = ax.log10().floor() as i64;
        let decimals = (sig as i64 - 1 - magnitude).max(0) as usize;
        let s = format!("{x:.decimals$}");
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        };
        if s == "-0" {
            "0".to_string()
        } else {
            s
        }
    }
}

/// 12-significant-digit rendering of a real number.
pub fn format_real(x: f64) -> String {
    format_sig(x, 12)
}

/// Canonical complex rendering: `re`, `imi`, `re+imi` or `re-imi`.
pub fn format_complex(z: Complex64) -> String {
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    if im == 0.0 {
        format_real(z.re)
    } else if z.re == 0.0 {
        format!("{}i", format_real(im))
    } else if im < 0.0 {
        format!("{}-{}i", format_real(z.re), format_real(-im))
    } else {
        format!("{}+{}i", format_real(z.re), format_real(im))
    }
}

/// Parse a complex literal: `re`, `re+imi`, `re-imi`, `imi`, `i`, `-i`.
/// Whitespace inside the literal is ignored; exponents (`1e-3`) are allowed
/// in either part.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex literal".to_string());
    }
    if !t.ends_with('i') {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| format!("bad number `{t}`"));
    }
    let body = &t[..t.len() - 1];
    // Split at the last sign that is not an exponent sign and not leading.
    let bytes = body.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        let c = bytes[k];
        if (c == b'+' || c == b'-') && bytes[k - 1] != b'e' && bytes[k - 1] != b'E' {
            split = Some(k);
            break;
        }
    }
    let (re_part, im_part) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re_part.is_empty() {
        0.0
    } else {
        re_part
            .parse::<f64>()
            .map_err(|_| format!("bad real part `{re_part}`"))?
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other
            .parse::<f64>()
            .map_err(|_| format!("bad imaginary part `{other}`"))?,
    };
    Ok(Complex64::new(re, im))
}
