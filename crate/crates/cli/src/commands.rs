use bsv_core::debranges::{db_dependence_check, db_extremal_bound, DBKernelData, StructureFunction};
use bsv_core::numerics::spectrum_probe;
use bsv_core::paley_wiener::build_extremal;
use bsv_core::selberg::build_selberg;
use bsv_core::trig_circle::build_trig_extremal;
use bsv_core::vanishing::{
    build_majorant, build_minorant, build_multipoint, rho_scan, threshold_gap, threshold_root, MajorantMode,
    MinorantMode,
};
use num_complex::Complex64;
use serde_json::Value;

use crate::args::{
    DebrangesArgs, EvalArgs, KappaArgs, MajorantKind, MinorantKind, RhoScanArgs, SelbergArgs, SpectrumArgs, TrigArgs,
};
use crate::error::CliError;
use crate::parse::{Object, StructureSpec};
use crate::table::{complex_text, Cell, Table};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn single_alpha(alpha: &[Complex64], object: &str) -> Result<Complex64, CliError> {
    match alpha {
        [a] => Ok(*a),
        _ => Err(usage(format!("{object} takes exactly one --alpha, got {}", alpha.len()))),
    }
}

fn points_text(points: &[Complex64]) -> Value {
    Value::from(points.iter().map(|&p| complex_text(p)).collect::<Vec<_>>())
}

fn minorant_mode(kind: MinorantKind) -> MinorantMode {
    match kind {
        MinorantKind::Additive => MinorantMode::Additive,
        MinorantKind::Multiplicative => MinorantMode::Multiplicative,
    }
}

pub fn kappa(args: &KappaArgs) -> Result<Table, CliError> {
    let e = build_extremal(args.alpha, args.beta, args.delta)?;
    let mut t = Table::new(
        "kappa",
        &[
            "alpha_re",
            "alpha_im",
            "beta_re",
            "beta_im",
            "delta",
            "kappa",
            "lambda1_re",
            "lambda1_im",
            "lambda2_re",
            "lambda2_im",
        ],
    );
    t.push(vec![
        args.alpha.re.into(),
        args.alpha.im.into(),
        args.beta.re.into(),
        args.beta.im.into(),
        args.delta.into(),
        e.kappa.into(),
        e.lambda1.re.into(),
        e.lambda1.im.into(),
        e.lambda2.re.into(),
        e.lambda2.im.into(),
    ]);
    Ok(t)
}

pub fn eval(args: &EvalArgs) -> Result<Table, CliError> {
    let ts = &args.grid.0;
    let name = args.object.name();
    let mut t: Table;
    if args.object == Object::F {
        let alpha = single_alpha(&args.alpha, name)?;
        let beta = args.beta.ok_or_else(|| usage("object F needs --beta"))?;
        let e = build_extremal(alpha, beta, args.delta)?;
        t = Table::new("eval", &["t", "value"]);
        t.param("alpha", complex_text(alpha));
        t.param("beta", complex_text(beta));
        for &x in ts {
            t.push(vec![x.into(), e.eval_f_real(x).into()]);
        }
    } else {
        let (a, b) = args.interval.ok_or_else(|| usage(format!("object {name} needs --interval")))?;
        let base = build_selberg(a, b, args.delta)?;
        let f: Box<dyn Fn(f64) -> f64> = match args.object {
            Object::SelbergMajorant => Box::new(move |x| base.majorant_real(x)),
            Object::SelbergMinorant => Box::new(move |x| base.minorant_real(x)),
            Object::GAlpha | Object::CAlpha => {
                let mode =
                    if args.object == Object::GAlpha { MajorantMode::Additive } else { MajorantMode::Multiplicative };
                let m = build_majorant(base, &args.alpha, mode)?;
                Box::new(move |x| m.eval_real(x))
            }
            Object::CMulti => {
                let m = if args.weights.is_empty() {
                    build_majorant(base, &args.alpha, MajorantMode::Multipoint)?
                } else {
                    build_multipoint(base, &args.alpha, &args.weights)?
                };
                Box::new(move |x| m.eval_real(x))
            }
            Object::Minorant => {
                let m = build_minorant(base, single_alpha(&args.alpha, name)?, minorant_mode(args.mode))?;
                Box::new(move |x| m.eval_real(x))
            }
            Object::F => unreachable!(),
        };
        t = Table::new("eval", &["t", "value", "indicator"]);
        if args.object == Object::Minorant {
            t.param("mode", minorant_mode(args.mode).name());
        }
        t.param("interval", vec![a, b]);
        if !args.alpha.is_empty() {
            t.param("alpha", points_text(&args.alpha));
        }
        for &x in ts {
            t.push(vec![x.into(), f(x).into(), base.chi(x).into()]);
        }
    }
    t.param("object", name);
    t.param("delta", args.delta);
    Ok(t)
}

pub fn spectrum(args: &SpectrumArgs) -> Result<Table, CliError> {
    let e = build_extremal(args.alpha, args.beta, args.delta)?;
    let form = e.transform();
    let half = args.probe_half_width.unwrap_or(4000.0 / args.delta + args.alpha.re.abs());
    let step = args.probe_step.unwrap_or(0.05 / args.delta);
    if !(half > 0.0 && step > 0.0) {
        return Err(usage("probe half-width and step must be positive"));
    }
    let count = 2.0 * half / step;
    if count > 5e7 {
        return Err(usage(format!("probe window needs {count:.0} samples; at most 5e7 allowed")));
    }
    let n = count as usize + 1;
    let samples: Vec<Complex64> = (0..n).map(|k| Complex64::new(e.eval_f_real(-half + k as f64 * step), 0.0)).collect();
    let mut t = Table::new("spectrum", &["xi", "transform_re", "transform_im", "probe_re", "probe_im", "residual"]);
    t.param("alpha", complex_text(args.alpha));
    t.param("beta", complex_text(args.beta));
    t.param("delta", args.delta);
    t.param("kappa", e.kappa);
    t.param("probe_half_width", half);
    t.param("probe_step", step);
    for &xi in &args.grid.0 {
        let exact = form.eval(xi);
        let probe = spectrum_probe(&samples, -half, step, xi);
        t.push(vec![
            xi.into(),
            exact.re.into(),
            exact.im.into(),
            probe.re.into(),
            probe.im.into(),
            (probe - exact).norm().into(),
        ]);
    }
    Ok(t)
}

pub fn selberg(args: &SelbergArgs) -> Result<Table, CliError> {
    let (a, b) = args.interval;
    let p = build_selberg(a, b, args.delta)?;
    if args.samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    let up = p.majorant_excess_numeric(args.tolerance)?;
    let down = p.minorant_deficit_numeric(args.tolerance)?;
    let (lo, hi) = (a - 20.0 / args.delta, b + 20.0 / args.delta);
    let mut ts: Vec<f64> = (0..args.samples).map(|k| lo + (hi - lo) * k as f64 / (args.samples - 1) as f64).collect();
    ts.extend([a, b]);
    let mut gap_up = f64::INFINITY;
    let mut gap_down = f64::INFINITY;
    let mut max_up = f64::NEG_INFINITY;
    let mut min_down = f64::INFINITY;
    for &x in &ts {
        let (cu, cd, chi) = (p.majorant_real(x), p.minorant_real(x), p.chi(x));
        gap_up = gap_up.min(cu - chi);
        gap_down = gap_down.min(chi - cd);
        max_up = max_up.max(cu);
        min_down = min_down.min(cd);
    }
    let mut t = Table::new("selberg", &["quantity", "value", "reference", "error_bound"]);
    t.param("interval", vec![a, b]);
    t.param("delta", args.delta);
    t.param("tolerance", args.tolerance);
    t.param("samples", args.samples);
    t.push(vec!["majorant_excess".into(), up.value.into(), p.majorant_excess().into(), up.error_bound.into()]);
    t.push(vec!["minorant_deficit".into(), down.value.into(), p.minorant_deficit().into(), down.error_bound.into()]);
    t.push(vec![
        "majorant_integral".into(),
        (p.length() + up.value).into(),
        (p.length() + p.majorant_excess()).into(),
        up.error_bound.into(),
    ]);
    t.push(vec![
        "minorant_integral".into(),
        (p.length() - down.value).into(),
        (p.length() - p.minorant_deficit()).into(),
        down.error_bound.into(),
    ]);
    t.push(vec!["majorant_min_gap".into(), gap_up.into(), Cell::Empty, Cell::Empty]);
    t.push(vec!["minorant_min_gap".into(), gap_down.into(), Cell::Empty, Cell::Empty]);
    t.push(vec!["majorant_max".into(), max_up.into(), Cell::Empty, Cell::Empty]);
    t.push(vec!["minorant_min".into(), min_down.into(), Cell::Empty, Cell::Empty]);
    Ok(t)
}

pub fn rho(args: &RhoScanArgs) -> Result<Table, CliError> {
    let mode = match args.mode {
        MajorantKind::Additive => MajorantMode::Additive,
        MajorantKind::Multiplicative => MajorantMode::Multiplicative,
        MajorantKind::Multipoint => MajorantMode::Multipoint,
    };
    let scan = rho_scan(args.interval, &args.alpha, &args.deltas.0, mode)?;
    let mut t = Table::new(
        "rho-scan",
        &[
            "delta",
            "integral_excess",
            "error_bound",
            "lower_reference",
            "multipoint_bound",
            "multipoint_bound_simplified",
            "slope",
        ],
    );
    t.param("interval", vec![args.interval.0, args.interval.1]);
    t.param("alpha", points_text(&args.alpha));
    t.param("mode", mode.name());
    t.meta.insert("slope".into(), Value::from(scan.slope));
    for row in &scan.rows {
        t.push(vec![
            row.delta.into(),
            row.integral_excess.into(),
            row.error_bound.into(),
            row.lower_reference.into(),
            row.multipoint_bound.into(),
            row.multipoint_bound_simplified.into(),
            scan.slope.into(),
        ]);
    }
    Ok(t)
}

pub fn threshold() -> Table {
    let u = threshold_root();
    let mut t = Table::new("threshold", &["u_star", "gap_at_root"]);
    t.push(vec![u.into(), threshold_gap(u).into()]);
    t
}

pub fn trig(args: &TrigArgs) -> Result<Table, CliError> {
    let e = build_trig_extremal(args.degree, args.alpha, args.beta)?;
    let mut t = Table::new("trig", &["n", "coeff_re", "coeff_im", "mean"]);
    t.param("degree", args.degree);
    t.param("alpha", complex_text(args.alpha));
    t.param("beta", complex_text(args.beta));
    t.meta.insert("mean".into(), Value::from(e.mean));
    for (n, c) in e.p_coeffs.iter().enumerate() {
        t.push(vec![n.into(), c.re.into(), c.im.into(), e.mean.into()]);
    }
    Ok(t)
}

fn structure(spec: StructureSpec) -> Result<(StructureFunction, String), CliError> {
    Ok(match spec {
        StructureSpec::Exponential(b) => (StructureFunction::exponential(b)?, format!("exponential:{b}")),
        StructureSpec::Linear => (StructureFunction::linear(), "linear".into()),
        StructureSpec::LinearExponential(b, w) => {
            (StructureFunction::linear_exponential(b, w)?, format!("linear_exponential:{b},{}", complex_text(w)))
        }
    })
}

pub fn debranges(args: &DebrangesArgs) -> Result<Table, CliError> {
    let (s, label) = structure(args.structure)?;
    let hb = s.hermite_biehler_check();
    let data = DBKernelData::new(s);
    let report = db_dependence_check(&data, args.alpha);
    let e = db_extremal_bound(&data, args.alpha, args.beta)?;
    let mut t = Table::new(
        "debranges",
        &[
            "structure",
            "bound",
            "lambda1_re",
            "lambda1_im",
            "lambda2_re",
            "lambda2_im",
            "independent",
            "gram_defect",
            "hermite_biehler",
        ],
    );
    t.param("alpha", complex_text(args.alpha));
    t.param("beta", complex_text(args.beta));
    t.push(vec![
        label.as_str().into(),
        e.bound.into(),
        e.lambda1.re.into(),
        e.lambda1.im.into(),
        e.lambda2.re.into(),
        e.lambda2.im.into(),
        report.independent.into(),
        report.gram_defect.into(),
        hb.passed.into(),
    ]);
    Ok(t)
}
