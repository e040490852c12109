use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::beurling::beurling_b;
use crate::error::{Error, Result};
use crate::numerics::{digamma_log_gap, trigamma_remainder, Quadrature, QuadratureResult};
use crate::paley_wiener::check_delta;

/// Selberg's majorant `C` and minorant `c` of the indicator of `[a, b]`,
/// both of exponential type `2πδ`, with `∫(C − χ) = ∫(χ − c) = 1/δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelbergPair {
    pub a: f64,
    pub b: f64,
    pub delta: f64,
}

pub fn build_selberg(a: f64, b: f64, delta: f64) -> Result<SelbergPair> {
    check_delta(delta)?;
    if !(a.is_finite() && b.is_finite() && a <= b) {
        return Err(Error::InvalidArgument(format!("interval [{a}, {b}] is not ordered")));
    }
    Ok(SelbergPair { a, b, delta })
}

impl SelbergPair {
    pub fn length(&self) -> f64 {
        self.b - self.a
    }

    /// Indicator of the closed interval.
    pub fn chi(&self, t: f64) -> f64 {
        if t >= self.a && t <= self.b {
            1.0
        } else {
            0.0
        }
    }

    /// `C(z) = ½{B(δ(z−a)) + B(δ(b−z))}`
    pub fn majorant(&self, z: Complex64) -> Complex64 {
        let d = self.delta;
        (beurling_b((z - self.a) * d) + beurling_b((-z + self.b) * d)) * 0.5
    }

    /// `c(z) = −½{B(δ(a−z)) + B(δ(z−b))}`
    pub fn minorant(&self, z: Complex64) -> Complex64 {
        let d = self.delta;
        -(beurling_b((-z + self.a) * d) + beurling_b((z - self.b) * d)) * 0.5
    }

    pub fn majorant_real(&self, t: f64) -> f64 {
        self.majorant(Complex64::new(t, 0.0)).re
    }

    pub fn minorant_real(&self, t: f64) -> f64 {
        self.minorant(Complex64::new(t, 0.0)).re
    }

    /// Closed-form `∫(C − χ)`.
    pub fn majorant_excess(&self) -> f64 {
        1.0 / self.delta
    }

    /// Closed-form `∫(χ − c)`.
    pub fn minorant_deficit(&self) -> f64 {
        1.0 / self.delta
    }

    /// Coefficient `c` with `|C − χ|, |χ − c| ≤ c/t²` for `|t| ≥ half_width`,
    /// from `0 ≤ B(u) − sgn u ≤ 2/(π²u²)`.
    pub fn tail_coefficient(&self, half_width: f64) -> f64 {
        let m = self.a.abs().max(self.b.abs());
        let shrink = (1.0 - m / half_width).max(0.0);
        if shrink == 0.0 {
            return f64::INFINITY;
        }
        2.0 / (PI * PI * self.delta * self.delta * shrink * shrink)
    }

    /// Smallest convenient `W` at which the oscillating part of
    /// [`SelbergPair::gap_tail`] is below `bound`.
    pub(crate) fn gap_half_width(&self, bound: f64) -> f64 {
        let d = self.delta;
        let m = self.a.abs().max(self.b.abs());
        let scale = 1.0 / (PI * PI * PI * d * d * d);
        let mut w = m + 10.0 / d;
        while scale / ((w - m) * (w - m)) > 0.5 * bound {
            w *= 1.5;
        }
        w
    }

    /// `∫_{|t|>W}` of `C − χ` (or `χ − c` when `minorant`) as
    /// `(value, oscillation bound)`. Requires `δ(W − max(|a|,|b|)) ≥ 10`.
    ///
    /// For `u ≥ 10`, `B(u) − 1 = (2/π²) sin²(πu) g(u)` and
    /// `B(−u) + 1 = (2/π²) sin²(πu) (u⁻² − g(u))` with `g(u) = 1/u − ψ′(u+1)`.
    /// Writing `sin² = (1 − cos 2πu)/2`, the non-oscillating halves integrate
    /// in closed form and the oscillating halves, having positive decreasing
    /// amplitudes, are bounded by `amplitude(U)/π`.
    pub(crate) fn gap_tail(&self, half_width: f64, minorant: bool) -> (f64, f64) {
        let d = self.delta;
        let g = |x: f64| 0.5 / (x * x) - trigamma_remainder(Complex64::new(x, 0.0)).re;
        let scale = 1.0 / (2.0 * PI * PI * d);
        let mut value = 0.0;
        let mut bound = 0.0;
        // Right tail uses (a, b); the left tail is the right tail of the
        // mirrored interval (−b, −a).
        for &(lo, hi) in &[(self.a, self.b), (-self.b, -self.a)] {
            // `near` enters through B(u) − 1, `far` through B(−v) + 1.
            let (near, far) = if minorant { (hi, lo) } else { (lo, hi) };
            let u = d * (half_width - near);
            let v = d * (half_width - far);
            value += scale * (digamma_log_gap(u) + 1.0 / v - digamma_log_gap(v));
            bound += scale * (g(u) + (1.0 / (v * v) - g(v))) / PI;
        }
        (value, bound)
    }

    fn integrate_gap<F>(&self, f: F, tolerance: f64, minorant: bool) -> Result<QuadratureResult<f64>>
    where
        F: FnMut(f64) -> f64,
    {
        if !(tolerance > 0.0) {
            return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tolerance}")));
        }
        let w = self.gap_half_width(0.1 * tolerance);
        let (tail_value, tail_bound) = self.gap_tail(w, minorant);
        let panels = (2.0 * w * self.delta).ceil().max(1.0) as usize;
        let core = Quadrature::new(0.5 * tolerance)
            .breakpoints(&[self.a, self.b])
            .initial_panels(panels.min(1 << 20))
            .integrate(f, -w, w)?;
        Ok(QuadratureResult {
            value: core.value + tail_value,
            error_bound: core.error_bound + tail_bound,
            tail_bound,
            panels: core.panels,
        })
    }

    /// `∫(C − χ)` by quadrature with closed-form tails.
    pub fn majorant_excess_numeric(&self, tolerance: f64) -> Result<QuadratureResult<f64>> {
        self.integrate_gap(|t| self.majorant_real(t) - self.chi(t), tolerance, false)
    }

    /// `∫(χ − c)` by quadrature with closed-form tails.
    pub fn minorant_deficit_numeric(&self, tolerance: f64) -> Result<QuadratureResult<f64>> {
        self.integrate_gap(|t| self.chi(t) - self.minorant_real(t), tolerance, true)
    }
}

/// Default value of the unspecified universal constant in the zero-exclusion
/// estimate.
pub const DEFAULT_ZERO_BOUND_CONSTANT: f64 = 1.0;

/// `c·L·σ²·|ω|·cosh(σ Im ω)`: a function with `F(0) ≥ 1` and `‖F‖₁ ≤ L`
/// of type `σ` cannot vanish at `ω` while this is below 1.
pub fn lipschitz_zero_bound(l1_norm: f64, sigma: f64, omega: Complex64, constant: f64) -> f64 {
    constant * l1_norm * sigma * sigma * omega.norm() * (sigma * omega.im).cosh()
}

/// Smallest-modulus zero of `C` inside the disc `|z| ≤ search_radius`.
///
/// `|C|` is sampled on a square grid; every grid-local minimum is refined by
/// Newton's method with a centered-difference derivative, and refined points
/// where `|C|` is negligible are accepted.
pub fn zero_scan(pair: &SelbergPair, search_radius: f64, grid_step: f64) -> Option<Complex64> {
    if !(search_radius > 0.0 && grid_step > 0.0) {
        return None;
    }
    let n = (search_radius / grid_step).ceil() as i64;
    let axis: Vec<f64> = (-n..=n).map(|k| k as f64 * grid_step).collect();
    let rows: Vec<Vec<f64>> =
        axis.par_iter().map(|&y| axis.iter().map(|&x| pair.majorant(Complex64::new(x, y)).norm()).collect()).collect();
    let m = axis.len();
    let mut seeds = Vec::new();
    for i in 1..m - 1 {
        for j in 1..m - 1 {
            let v = rows[i][j];
            let z = Complex64::new(axis[j], axis[i]);
            if z.norm() > search_radius + grid_step {
                continue;
            }
            let is_min = (-1..=1)
                .all(|di: i64| (-1..=1).all(|dj: i64| rows[(i as i64 + di) as usize][(j as i64 + dj) as usize] >= v));
            if is_min {
                seeds.push(z);
            }
        }
    }
    let scale = 1.0 + rows.iter().flatten().fold(0.0f64, |acc, &v| acc.max(v.min(1e6)));
    let refined: Vec<Complex64> = seeds
        .par_iter()
        .filter_map(|&z0| newton(pair, z0, grid_step, scale))
        .filter(|z| z.norm() <= search_radius)
        .collect();
    refined.into_iter().min_by(|p, q| p.norm().partial_cmp(&q.norm()).unwrap())
}

fn newton(pair: &SelbergPair, z0: Complex64, step: f64, scale: f64) -> Option<Complex64> {
    let f = |z: Complex64| pair.majorant(z);
    let mut z = z0;
    let h = 1e-5 * step.max(1e-3);
    for _ in 0..100 {
        let fz = f(z);
        let d = (f(z + h) - f(z - h)) / (2.0 * h);
        if d.norm() == 0.0 {
            break;
        }
        let dz = fz / d;
        // Keep the iterate near its seed.
        let dz = if dz.norm() > 2.0 * step { dz * (2.0 * step / dz.norm()) } else { dz };
        z -= dz;
        if dz.norm() < 1e-13 * (1.0 + z.norm()) {
            break;
        }
    }
    // Double real zeros converge linearly, so accept on residual size.
    if f(z).norm() <= 1e-10 * scale && (z - z0).norm() <= 4.0 * step {
        Some(z)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lipschitz_bound_examples() {
        assert_eq!(lipschitz_zero_bound(3.0, 2.0, Complex64::new(0.0, 0.0), 1.0), 0.0);
        let v = lipschitz_zero_bound(3.0, 2.0, Complex64::new(-0.5, 0.0), 1.0);
        assert!((v - 3.0 * 4.0 * 0.5).abs() < 1e-15);
    }

    #[test]
    fn rejects_reversed_interval() {
        assert!(build_selberg(1.0, -1.0, 1.0).is_err());
        assert!(build_selberg(-1.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn majorant_and_minorant_at_endpoints() {
        let p = build_selberg(-1.0, 1.0, 2.0).unwrap();
        assert!(p.majorant_real(-1.0) >= 1.0 - 1e-12);
        assert!(p.majorant_real(1.0) >= 1.0 - 1e-12);
        assert!(p.minorant_real(1.0) <= 1.0 + 1e-12);
    }
}
