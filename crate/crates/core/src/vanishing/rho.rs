use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::majorant::{build_majorant, MajorantMode, VanishingMajorant};
use crate::error::{Error, Result};
use crate::numerics::{Quadrature, QuadratureResult};
use crate::paley_wiener::check_upper;
use crate::selberg::build_selberg;

/// Relative accuracy used by [`rho_upper_value`].
pub const DEFAULT_RHO_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoValue {
    /// `∫(M − χ)` for the majorant `M`, an upper bound for `ρ` at its
    /// spectral radius.
    pub integral_excess: f64,
    pub error_bound: f64,
}

/// [`rho_upper_value_with`] at [`DEFAULT_RHO_TOLERANCE`].
pub fn rho_upper_value(majorant: &VanishingMajorant) -> Result<RhoValue> {
    rho_upper_value_with(majorant, DEFAULT_RHO_TOLERANCE)
}

/// `∫(M − χ) = 1/δ + ∫(M − C)`.
///
/// The additive correction integrates to `κ(α, −C(α), δ)` exactly. Product
/// corrections `C·(G − 1)` are nonnegative and integrated numerically to
/// relative accuracy `relative`.
pub fn rho_upper_value_with(majorant: &VanishingMajorant, relative: f64) -> Result<RhoValue> {
    if !(relative > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {relative}")));
    }
    let selberg = 1.0 / majorant.base.delta;
    match majorant.mode {
        MajorantMode::Additive => {
            let value = selberg + majorant.factors[0].kappa;
            Ok(RhoValue { integral_excess: value, error_bound: 4.0 * f64::EPSILON * value })
        }
        _ => {
            let r = product_correction(majorant, relative)?;
            Ok(RhoValue {
                integral_excess: selberg + r.value,
                error_bound: r.error_bound + 2.0 * f64::EPSILON * selberg,
            })
        }
    }
}

fn product_correction(m: &VanishingMajorant, relative: f64) -> Result<QuadratureResult<f64>> {
    let integrand = |t: f64| m.base.majorant_real(t) * m.product_excess(t);
    let w0 = m.core_half_width();
    // The integrand is nonnegative, so a coarse Riemann sum fixes the scale.
    let samples = 4001;
    let h = 2.0 * w0 / (samples - 1) as f64;
    let scale: f64 = (0..samples).map(|k| integrand(-w0 + k as f64 * h)).sum::<f64>() * h;
    if scale == 0.0 {
        return Ok(QuadratureResult {
            value: 0.0,
            error_bound: m.product_tail(w0).mass_beyond(w0),
            tail_bound: 0.0,
            panels: 0,
        });
    }
    let tolerance = relative * scale;
    let mut w = w0;
    while m.product_tail(w).mass_beyond(w) > 0.1 * tolerance {
        w *= 2.0;
    }
    let panels = (2.0 * w * m.spectral_radius).ceil().max(1.0) as usize;
    Quadrature::new(0.9 * tolerance).initial_panels(panels).integrate_line(integrand, m.product_tail(w), w)
}

/// `∫(M − χ)` by quadrature of the evaluator itself, to absolute accuracy
/// `tolerance`.
///
/// The Selberg part of the tail is added in closed form; the additive `F`
/// tail is integrated after inversion; product tails enter the bound only.
pub fn excess_numeric(majorant: &VanishingMajorant, tolerance: f64) -> Result<QuadratureResult<f64>> {
    if !(tolerance > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tolerance}")));
    }
    let base = majorant.base;
    let mut w = base.gap_half_width(0.1 * tolerance).max(majorant.core_half_width());
    if majorant.mode == MajorantMode::Additive {
        w = w.max(majorant.factors[0].tight_half_width(0.1 * tolerance));
    } else {
        while majorant.product_tail(w).mass_beyond(w) > 0.1 * tolerance {
            w *= 2.0;
        }
    }
    let (gap_value, gap_bound) = base.gap_tail(w, false);
    let (extra_value, extra_bound) = if majorant.mode == MajorantMode::Additive {
        let r = majorant.factors[0].tail_beyond(w, 0.1 * tolerance)?;
        (r.value, r.error_bound)
    } else {
        (0.0, majorant.product_tail(w).mass_beyond(w))
    };
    let panels = (2.0 * w * majorant.spectral_radius).ceil().max(1.0) as usize;
    let core = Quadrature::new(0.5 * tolerance).breakpoints(&[base.a, base.b]).initial_panels(panels).integrate(
        |t| majorant.eval_real(t) - base.chi(t),
        -w,
        w,
    )?;
    let tail_bound = gap_bound + extra_bound;
    Ok(QuadratureResult {
        value: core.value + gap_value + extra_value,
        error_bound: core.error_bound + tail_bound,
        tail_bound,
        panels: core.panels,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoRow {
    pub delta: f64,
    pub integral_excess: f64,
    pub error_bound: f64,
    /// `δ⁻²`, the order of the lower bound for a single point.
    pub lower_reference: f64,
    /// Excess implied by [`multipoint_integral_bound`] with `φ = C`
    /// (multipoint mode only).
    pub multipoint_bound: Option<f64>,
    /// The same with the simplified per-factor bound.
    pub multipoint_bound_simplified: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RhoScan {
    /// Rows sorted by `delta`.
    pub rows: Vec<RhoRow>,
    /// Least-squares slope of `log(integral_excess)` against `log(delta)`.
    pub slope: f64,
}

pub fn rho_scan(interval: (f64, f64), points: &[Complex64], deltas: &[f64], mode: MajorantMode) -> Result<RhoScan> {
    if deltas.len() < 3 {
        return Err(Error::InvalidArgument(format!("a slope needs at least 3 deltas, got {}", deltas.len())));
    }
    let mut rows = deltas
        .par_iter()
        .map(|&d| {
            let base = build_selberg(interval.0, interval.1, d)?;
            let m = build_majorant(base, points, mode)?;
            let r = rho_upper_value(&m)?;
            let (bound, simplified) = if mode == MajorantMode::Multipoint {
                let l1 = base.length() + 1.0 / d;
                (
                    Some(multipoint_integral_bound(l1, l1, points, d)? - base.length()),
                    Some(multipoint_integral_bound_simplified(l1, l1, points, d)? - base.length()),
                )
            } else {
                (None, None)
            };
            Ok(RhoRow {
                delta: d,
                integral_excess: r.integral_excess,
                error_bound: r.error_bound,
                lower_reference: 1.0 / (d * d),
                multipoint_bound: bound,
                multipoint_bound_simplified: simplified,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|p, q| p.delta.total_cmp(&q.delta));
    let xs: Vec<f64> = rows.iter().map(|r| r.delta).collect();
    let ys: Vec<f64> = rows.iter().map(|r| r.integral_excess).collect();
    Ok(RhoScan { slope: loglog_slope(&xs, &ys), rows })
}

/// Least-squares slope of `log y` against `log x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len().min(ys.len()) as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// `φ̂(0) + N‖φ‖₁ Σ_S Π_{ℓ∈S} b_ℓ` over nonempty subsets `S`, with
/// `b_ℓ = 4πδy/(sinh 2πyδ − 2πyδ)` at `y = Im α_ℓ / N`, the sup of the
/// factor `F(·/N; α_ℓ/N, −1)`.
pub fn multipoint_integral_bound(phi_l1: f64, phi_hat0: f64, points: &[Complex64], delta: f64) -> Result<f64> {
    let n = points.len() as f64;
    subset_bound(phi_l1, phi_hat0, points, |im| {
        let y = im / n;
        let u = 2.0 * PI * y * delta;
        4.0 * PI * delta * y / (u.sinh() - u)
    })
}

/// [`multipoint_integral_bound`] with the per-factor value
/// `2/(2π Im α_ℓ δ²)` in place of the exact sup.
pub fn multipoint_integral_bound_simplified(
    phi_l1: f64,
    phi_hat0: f64,
    points: &[Complex64],
    delta: f64,
) -> Result<f64> {
    subset_bound(phi_l1, phi_hat0, points, |im| 2.0 / (2.0 * PI * im * delta * delta))
}

fn subset_bound<B>(phi_l1: f64, phi_hat0: f64, points: &[Complex64], per_factor: B) -> Result<f64>
where
    B: Fn(f64) -> f64,
{
    for &p in points {
        check_upper(p)?;
    }
    let n = points.len() as f64;
    // Σ over nonempty subsets of Π b_ℓ equals Π(1 + b_ℓ) − 1.
    let sum = points.iter().fold(0.0, |acc, p| {
        let b = per_factor(p.im);
        acc + b + acc * b
    });
    Ok(phi_hat0 + n * phi_l1 * sum)
}
