//! Grammars for command-line values.
//!
//! * complex: `a+bi`, `a-bi`, `bi`, `a`, `i`, `-i`, whitespace ignored, with
//!   scientific notation in either part (`1e-3-2.5E2i`);
//! * interval: `a,b` with `a ≤ b`;
//! * grid: `start:stop:step` with `start ≤ stop` and `step > 0`, inclusive of
//!   `stop` up to rounding;
//! * list: comma-separated reals, or a grid.

use num_complex::Complex64;

fn finite(s: &str, what: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("invalid {what} {s:?}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{what} must be finite, got {s:?}"))
    }
}

pub fn parse_real(s: &str) -> Result<f64, String> {
    finite(s, "number")
}

/// Coefficient of `i`: empty or a bare sign means ±1.
fn imaginary_coefficient(s: &str) -> Result<f64, String> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => finite(s, "imaginary part"),
    }
}

pub fn parse_complex(input: &str) -> Result<Complex64, String> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty complex number".into());
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(finite(&s, "complex number")?, 0.0));
    };
    // The split is the last sign that is neither leading nor an exponent sign.
    let bytes = body.as_bytes();
    let split =
        (1..bytes.len()).rev().find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(Complex64::new(
            finite(&body[..k], "real part").map_err(|e| format!("{e} in {input:?}"))?,
            imaginary_coefficient(&body[k..]).map_err(|e| format!("{e} in {input:?}"))?,
        )),
        None => Ok(Complex64::new(0.0, imaginary_coefficient(body).map_err(|e| format!("{e} in {input:?}"))?)),
    }
}

pub fn parse_interval(input: &str) -> Result<(f64, f64), String> {
    let (a, b) = input.split_once(',').ok_or_else(|| format!("interval must look like a,b; got {input:?}"))?;
    let (a, b) = (finite(a, "interval endpoint")?, finite(b, "interval endpoint")?);
    if a > b {
        return Err(format!("interval endpoints out of order: {a} > {b}"));
    }
    Ok((a, b))
}

pub fn parse_grid(input: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = input.split(':').collect();
    let [start, stop, step] = parts[..] else {
        return Err(format!("grid must look like start:stop:step; got {input:?}"));
    };
    let (start, stop, step) = (finite(start, "grid start")?, finite(stop, "grid stop")?, finite(step, "grid step")?);
    if step.is_nan() || step <= 0.0 {
        return Err(format!("grid step must be positive, got {step}"));
    }
    if start > stop {
        return Err(format!("grid start {start} exceeds stop {stop}"));
    }
    let count = ((stop - start) / step * (1.0 + 1e-12)).floor();
    if count > 1e7 {
        return Err(format!("grid {input:?} has more than 10^7 points"));
    }
    Ok((0..=count as usize).map(|k| start + k as f64 * step).collect())
}

pub fn parse_list(input: &str) -> Result<Vec<f64>, String> {
    if input.contains(':') {
        return parse_grid(input);
    }
    input.split(',').map(|s| finite(s, "list entry")).collect()
}

/// A parsed grid or list, kept whole as one argument value.
#[derive(Debug, Clone, PartialEq)]
pub struct Points(pub Vec<f64>);

pub fn grid_points(input: &str) -> Result<Points, String> {
    parse_grid(input).map(Points)
}

pub fn list_points(input: &str) -> Result<Points, String> {
    parse_list(input).map(Points)
}

/// Objects accepted by `eval --object`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Object {
    /// Paley–Wiener extremal `F`.
    F,
    /// Selberg majorant.
    SelbergMajorant,
    /// Selberg minorant.
    SelbergMinorant,
    GAlpha,
    CAlpha,
    CMulti,
    Minorant,
}

impl Object {
    pub const NAMES: [&'static str; 7] = ["F", "C", "c", "G_alpha", "C_alpha", "C_multi", "minorant"];

    pub fn name(self) -> &'static str {
        match self {
            Object::F => "F",
            Object::SelbergMajorant => "C",
            Object::SelbergMinorant => "c",
            Object::GAlpha => "G_alpha",
            Object::CAlpha => "C_alpha",
            Object::CMulti => "C_multi",
            Object::Minorant => "minorant",
        }
    }
}

pub fn parse_object(input: &str) -> Result<Object, String> {
    Ok(match input {
        "F" => Object::F,
        "C" => Object::SelbergMajorant,
        "c" => Object::SelbergMinorant,
        "G_alpha" => Object::GAlpha,
        "C_alpha" => Object::CAlpha,
        "C_multi" => Object::CMulti,
        "minorant" => Object::Minorant,
        _ => return Err(format!("unknown object {input:?}; expected one of {}", Object::NAMES.join(", "))),
    })
}

/// `exponential:B`, `linear`, `linear_exponential:B,OMEGA`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StructureSpec {
    Exponential(f64),
    Linear,
    LinearExponential(f64, Complex64),
}

pub fn parse_structure(input: &str) -> Result<StructureSpec, String> {
    let (name, params) = input.split_once(':').unwrap_or((input, ""));
    match name {
        "linear" if params.is_empty() => Ok(StructureSpec::Linear),
        "exponential" => Ok(StructureSpec::Exponential(finite(params, "type parameter b")?)),
        "linear_exponential" => {
            let (b, omega) =
                params.split_once(',').ok_or_else(|| format!("expected linear_exponential:B,OMEGA; got {input:?}"))?;
            Ok(StructureSpec::LinearExponential(finite(b, "type parameter b")?, parse_complex(omega)?))
        }
        _ => Err(format!(
            "unknown structure function {input:?}; expected exponential:B, linear or linear_exponential:B,OMEGA"
        )),
    }
}
