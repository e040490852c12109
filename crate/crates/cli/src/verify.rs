//! Built-in self-checks, each reported as a residual against a tolerance.

use std::f64::consts::PI;

use bsv_core::debranges::{db_dependence_check, db_extremal_bound, db_kernel, DBKernelData, StructureFunction};
use bsv_core::numerics::spectrum_probe;
use bsv_core::paley_wiener::{build_extremal, kappa_real_beta, kappa_value, kernel_eval, PWKernel};
use bsv_core::selberg::build_selberg;
use bsv_core::trig_circle::build_trig_extremal;
use bsv_core::vanishing::{build_majorant, build_minorant, threshold_root, MajorantMode, MinorantMode};
use bsv_core::{Error, Result};
use num_complex::Complex64;

use crate::args::Suite;
use crate::table::Table;

pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub residual: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.residual <= self.tolerance
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn pw_grid() -> Vec<(Complex64, Complex64, f64)> {
    let mut out = Vec::new();
    for a in [c(0.0, 0.5), c(0.0, 1.0), c(1.0, 2.0)] {
        for b in [c(-1.0, 0.0), c(0.0, 1.0), c(2.0, -1.0)] {
            for d in [0.1, 1.0, 10.0] {
                out.push((a, b, d));
            }
        }
    }
    out
}

fn worst<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    // NaN must fail the check, so it dominates.
    values.into_iter().fold(0.0, |acc: f64, v| if v.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(v) })
}

fn kernel() -> Result<Vec<Check>> {
    let mut sym = Vec::new();
    let mut diag = Vec::new();
    let mut db = Vec::new();
    for d in [0.1, 1.0, 10.0] {
        let k = PWKernel::new(d)?;
        let data = DBKernelData::new(StructureFunction::exponential(d / 2.0)?);
        for (i, x) in [-2.0, -0.5, 0.3, 1.7].into_iter().enumerate() {
            for y in [-1.0, -0.2, 0.4, 1.3] {
                let w = c(x / d, y / d);
                let z = c((x + 0.9 * i as f64) / d, (0.5 - y) / d);
                let kwz = k.eval(w, z);
                sym.push((kwz - k.eval(z, w).conj()).norm() / kwz.norm().max(1.0));
                let pw = kernel_eval(d, w, z);
                db.push((db_kernel(&data, w, z) - pw).norm() / pw.norm().max(1.0));
                if y > 0.0 {
                    let exact = (2.0 * PI * d * y / d).sinh() / (2.0 * PI * y / d);
                    diag.push((k.diagonal(y / d) - exact).abs() / exact);
                }
            }
        }
    }
    Ok(vec![
        Check { suite: "kernel", name: "hermitian_symmetry", residual: worst(sym), tolerance: 1e-12 },
        Check { suite: "kernel", name: "diagonal_closed_form", residual: worst(diag), tolerance: 1e-12 },
        Check { suite: "kernel", name: "exponential_structure_function", residual: worst(db), tolerance: 1e-10 },
    ])
}

fn extremal() -> Result<Vec<Check>> {
    let mut interp = Vec::new();
    let mut real_beta = Vec::new();
    let mut scaling = Vec::new();
    for (a, b, d) in pw_grid() {
        let e = build_extremal(a, b, d)?;
        interp.push((e.eval_f(a) - b).norm() / (1.0 + b.norm()));
        let k = e.kappa;
        for r in [0.5, 2.0, 7.0] {
            scaling.push((kappa_value(a * r, b, d / r)? / r - k).abs() / k);
            scaling.push((kappa_value(a, b * r, d)? - r * k).abs() / (r * k));
        }
        for t in [-3.0, 0.25, 11.0] {
            scaling.push((kappa_value(a + t, b, d)? - k).abs() / k);
        }
        for rb in [-2.0, 0.5, 3.0] {
            let closed = kappa_real_beta(a, rb, d)?;
            real_beta.push((kappa_value(a, c(rb, 0.0), d)? - closed).abs() / closed);
        }
    }
    let mut quad = Vec::new();
    for (a, b, d) in [(c(0.0, 1.0), c(-1.0, 0.0), 1.0), (c(1.0, 2.0), c(2.0, -1.0), 0.1)] {
        let e = build_extremal(a, b, d)?;
        let q = e.integral(1e-7)?;
        quad.push((q.value - e.kappa).abs() / e.kappa);
    }
    Ok(vec![
        Check { suite: "extremal", name: "interpolation", residual: worst(interp), tolerance: 1e-9 },
        Check { suite: "extremal", name: "real_beta_closed_form", residual: worst(real_beta), tolerance: 1e-12 },
        Check { suite: "extremal", name: "scaling_laws", residual: worst(scaling), tolerance: 1e-10 },
        Check { suite: "extremal", name: "kappa_by_quadrature", residual: worst(quad), tolerance: 1e-4 },
    ])
}

fn spectrum() -> Result<Vec<Check>> {
    let mut zero = Vec::new();
    let mut edge = Vec::new();
    for (a, b, d) in pw_grid() {
        let e = build_extremal(a, b, d)?;
        let form = e.transform();
        zero.push((form.eval(0.0) - e.kappa).norm() / e.kappa);
        edge.push(form.eval(d).norm().max(form.eval(-d).norm()));
    }
    let e = build_extremal(c(0.0, 1.0), c(-1.0, 0.0), 1.0)?;
    let form = e.transform();
    let (half, h) = (4000.0, 0.05);
    let n = (2.0 * half / h) as usize + 1;
    let samples: Vec<Complex64> = (0..n).map(|k| c(e.eval_f_real(-half + k as f64 * h), 0.0)).collect();
    let probe = worst(
        [0.0, 0.1, 0.35, -0.6, 0.9].map(|xi| (spectrum_probe(&samples, -half, h, xi) - form.eval(xi)).norm() / e.kappa),
    );
    Ok(vec![
        Check { suite: "spectrum", name: "transform_at_zero_is_kappa", residual: worst(zero), tolerance: 1e-12 },
        Check { suite: "spectrum", name: "transform_vanishes_at_edge", residual: worst(edge), tolerance: 0.0 },
        Check { suite: "spectrum", name: "discrete_probe", residual: probe, tolerance: 1e-3 },
    ])
}

fn selberg() -> Result<Vec<Check>> {
    let mut identities = Vec::new();
    let mut ordering = Vec::new();
    for (a, b, d) in [(-1.0, 1.0, 0.5), (-1.0, 1.0, 2.0), (0.0, 3.0, 1.0)] {
        let p = build_selberg(a, b, d)?;
        identities.push((p.majorant_excess_numeric(1e-8)?.value - 1.0 / d).abs());
        identities.push((p.minorant_deficit_numeric(1e-8)?.value - 1.0 / d).abs());
        let (lo, hi) = (a - 20.0 / d, b + 20.0 / d);
        for k in 0..10_000 {
            let t = lo + (hi - lo) * k as f64 / 9_999.0;
            let chi = p.chi(t);
            ordering.push((chi - p.majorant_real(t)).max(p.minorant_real(t) - chi).max(0.0));
        }
    }
    Ok(vec![
        Check { suite: "selberg", name: "integral_identities", residual: worst(identities), tolerance: 1e-6 },
        Check { suite: "selberg", name: "ordering", residual: worst(ordering), tolerance: 1e-10 },
    ])
}

fn vanishing() -> Result<Vec<Check>> {
    let base = build_selberg(-1.0, 1.0, 1.0)?;
    let alpha = c(0.3, 1.0);
    let majorants = [
        build_majorant(base, &[alpha], MajorantMode::Additive)?,
        build_majorant(base, &[alpha], MajorantMode::Multiplicative)?,
        build_majorant(base, &[c(0.0, 1.0), c(1.0, 1.0)], MajorantMode::Multipoint)?,
    ];
    let minorants = [
        build_minorant(base, alpha, MinorantMode::Additive)?,
        build_minorant(base, c(0.0, 1.0), MinorantMode::Multiplicative)?,
    ];
    let ts: Vec<f64> = (0..10_000).map(|k| -40.0 + 80.0 * k as f64 / 9_999.0).collect();
    let mut residuals = Vec::new();
    let mut ordering = Vec::new();
    for m in &majorants {
        let scale = ts.iter().map(|&t| m.eval_real(t).abs()).fold(1.0, f64::max);
        residuals.extend(m.residuals().into_iter().map(|r| r / scale));
        ordering.extend(ts.iter().map(|&t| (base.chi(t) - m.eval_real(t)).max(0.0)));
    }
    for m in &minorants {
        let scale = ts.iter().map(|&t| m.eval_real(t).abs()).fold(1.0, f64::max);
        residuals.push(m.residual() / scale);
        ordering.extend(ts.iter().map(|&t| (m.eval_real(t) - base.chi(t)).max(0.0)));
    }
    let u = threshold_root();
    let below = build_minorant(base, c(0.0, 0.9 * u / PI), MinorantMode::Multiplicative);
    let above = build_minorant(base, c(0.0, 1.1 * u / PI), MinorantMode::Multiplicative);
    let gate = matches!(below, Err(Error::ThresholdViolated { .. })) && above.is_ok();
    Ok(vec![
        Check { suite: "vanishing", name: "vanishes_at_points", residual: worst(residuals), tolerance: 1e-9 },
        Check { suite: "vanishing", name: "ordering", residual: worst(ordering), tolerance: 1e-10 },
        Check { suite: "vanishing", name: "threshold_root", residual: (u - 1.0295).abs(), tolerance: 5e-4 },
        Check { suite: "vanishing", name: "threshold_gate", residual: if gate { 0.0 } else { 1.0 }, tolerance: 0.0 },
    ])
}

fn trig() -> Result<Vec<Check>> {
    let e = build_trig_extremal(1, c(2.0, 0.0), c(1.0, 0.0))?;
    let mut exact = Vec::new();
    for n in [1, 2, 4] {
        for (a, b) in [(c(2.0, 0.0), c(1.0, 0.0)), (c(0.0, 0.5), c(-1.0, 0.0)), (c(3.0, 1.0), c(0.0, 1.0))] {
            let t = build_trig_extremal(n, a, b)?;
            exact.push((t.constant_coeff() - t.mean).abs() / t.mean.max(1.0));
        }
    }
    Ok(vec![
        Check { suite: "trig", name: "four_ninths", residual: (e.mean - 4.0 / 9.0).abs(), tolerance: 1e-12 },
        Check { suite: "trig", name: "mean_is_constant_coefficient", residual: worst(exact), tolerance: 1e-12 },
    ])
}

fn debranges() -> Result<Vec<Check>> {
    let linear = db_dependence_check(&DBKernelData::new(StructureFunction::linear()), c(0.0, 1.0));
    let mut grid = Vec::new();
    for (a, b, d) in pw_grid() {
        let data = DBKernelData::new(StructureFunction::exponential(d / 2.0)?);
        let k = kappa_value(a, b, d)?;
        grid.push((db_extremal_bound(&data, a, b)?.bound - k).abs() / k.max(1.0));
    }
    Ok(vec![
        Check {
            suite: "debranges",
            name: "linear_dependent",
            residual: if linear.independent { f64::INFINITY } else { linear.gram_defect.abs() },
            tolerance: 1e-10,
        },
        Check { suite: "debranges", name: "paley_wiener_grid", residual: worst(grid), tolerance: 1e-10 },
    ])
}

pub fn run_suite(suite: Suite) -> Result<Vec<Check>> {
    let runners: &[fn() -> Result<Vec<Check>>] = match suite {
        Suite::Kernel => &[kernel],
        Suite::Extremal => &[extremal],
        Suite::Spectrum => &[spectrum],
        Suite::Selberg => &[selberg],
        Suite::Vanishing => &[vanishing],
        Suite::Trig => &[trig],
        Suite::Debranges => &[debranges],
        Suite::All => &[kernel, extremal, spectrum, selberg, vanishing, trig, debranges],
    };
    let mut out = Vec::new();
    for run in runners {
        out.extend(run()?);
    }
    Ok(out)
}

pub fn table(checks: &[Check]) -> Table {
    let mut t = Table::new("verify", &["suite", "check", "residual", "tolerance", "passed"]);
    for ch in checks {
        t.push(vec![ch.suite.into(), ch.name.into(), ch.residual.into(), ch.tolerance.into(), ch.passed().into()]);
    }
    t
}
