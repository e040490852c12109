//! Adaptive Gauss–Kronrod quadrature on finite intervals and on the real
//! line with an analytic tail bound.
//!
//! Panels are bisected until the |K15 − G7| estimate of each panel is below
//! `tolerance * width / total_width`. Over the whole line the caller supplies
//! an envelope `|f(t)| ≤ c / |t|^p` valid for `|t| ≥ half_width`; the neglected
//! tail mass `2c / ((p−1) W^{p−1})` is added to the reported error bound.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Kronrod abscissae on [0, 1); the Gauss nodes are the odd-indexed ones.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Default cap on the number of accepted plus split panels.
pub const DEFAULT_PANEL_BUDGET: usize = 4_000_000;

/// Scalar types the quadrature can accumulate.
pub trait QuadValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    fn magnitude(self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<T> {
    pub value: T,
    /// Adaptive estimate plus analytic tail bound; always ≥ 0.
    pub error_bound: f64,
    /// Analytic tail contribution to `error_bound`.
    pub tail_bound: f64,
    pub panels: usize,
}

/// Envelope `|f(t)| ≤ coefficient / |t|^power` for `|t| ≥ half_width`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailEnvelope {
    pub coefficient: f64,
    pub power: f64,
}

impl TailEnvelope {
    pub fn inverse_square(coefficient: f64) -> Self {
        Self { coefficient, power: 2.0 }
    }

    /// Mass of the envelope on |t| ≥ half_width (both sides).
    pub fn mass_beyond(&self, half_width: f64) -> f64 {
        2.0 * self.coefficient / ((self.power - 1.0) * half_width.powf(self.power - 1.0))
    }
}

fn kronrod_panel<T, F>(f: &mut F, a: f64, b: f64) -> (T, f64)
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod = kronrod + pair * WGK[j];
        if j % 2 == 1 {
            gauss = gauss + pair * WG[j / 2];
        }
    }
    let kronrod = kronrod * half;
    let gauss = gauss * half;
    (kronrod, (kronrod - gauss).magnitude())
}

/// Builder for adaptive integration over a finite interval, optionally with
/// forced breakpoints and a uniform initial partition.
#[derive(Debug, Clone)]
pub struct Quadrature {
    tolerance: f64,
    breakpoints: Vec<f64>,
    initial_panels: usize,
    panel_budget: usize,
}

impl Quadrature {
    pub fn new(tolerance: f64) -> Self {
        Self { tolerance, breakpoints: Vec::new(), initial_panels: 1, panel_budget: DEFAULT_PANEL_BUDGET }
    }

    /// Points that must be panel boundaries (jumps of the integrand).
    pub fn breakpoints(mut self, points: &[f64]) -> Self {
        self.breakpoints.extend_from_slice(points);
        self
    }

    /// Number of equal panels each breakpoint-delimited piece starts from.
    pub fn initial_panels(mut self, n: usize) -> Self {
        self.initial_panels = n.max(1);
        self
    }

    pub fn panel_budget(mut self, n: usize) -> Self {
        self.panel_budget = n;
        self
    }

    pub fn integrate<T, F>(&self, mut f: F, a: f64, b: f64) -> Result<QuadratureResult<T>>
    where
        T: QuadValue,
        F: FnMut(f64) -> T,
    {
        if !(self.tolerance > 0.0) || !(a.is_finite() && b.is_finite()) || b < a {
            return Err(Error::InvalidArgument(format!("quadrature on [{a}, {b}] with tolerance {}", self.tolerance)));
        }
        if a == b {
            return Ok(QuadratureResult { value: T::zero(), error_bound: 0.0, tail_bound: 0.0, panels: 0 });
        }
        let total = b - a;
        let mut cuts: Vec<f64> = self.breakpoints.iter().copied().filter(|&p| p > a && p < b).collect();
        cuts.push(a);
        cuts.push(b);
        cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
        cuts.dedup();

        let mut stack: Vec<(f64, f64)> = Vec::new();
        for w in cuts.windows(2).rev() {
            let n = self.initial_panels;
            let h = (w[1] - w[0]) / n as f64;
            for k in (0..n).rev() {
                let lo = w[0] + h * k as f64;
                let hi = if k + 1 == n { w[1] } else { lo + h };
                stack.push((lo, hi));
            }
        }

        let min_width = total * 1e-13;
        let mut value = T::zero();
        let mut error = 0.0;
        let mut panels = 0usize;
        while let Some((lo, hi)) = stack.pop() {
            panels += 1;
            let (est, err) = kronrod_panel(&mut f, lo, hi);
            let allowed = self.tolerance * (hi - lo) / total;
            if err <= allowed || hi - lo <= min_width {
                value = value + est;
                error += err;
                continue;
            }
            if panels >= self.panel_budget {
                return Err(Error::NonConvergence { panels, estimate: (value + est).magnitude(), error: error + err });
            }
            let mid = 0.5 * (lo + hi);
            stack.push((mid, hi));
            stack.push((lo, mid));
        }
        if !value.magnitude().is_finite() {
            return Err(Error::NonConvergence { panels, estimate: value.magnitude(), error });
        }
        Ok(QuadratureResult { value, error_bound: error, tail_bound: 0.0, panels })
    }

    /// Integrate over the real line: adaptive quadrature on
    /// `[-half_width, half_width]` plus the envelope's tail mass in the bound.
    pub fn integrate_line<T, F>(&self, f: F, tail: TailEnvelope, half_width: f64) -> Result<QuadratureResult<T>>
    where
        T: QuadValue,
        F: FnMut(f64) -> T,
    {
        if !(half_width > 0.0) || !(tail.coefficient >= 0.0) || !(tail.power > 1.0) {
            return Err(Error::InvalidArgument(format!("line integral with half_width {half_width}, tail {tail:?}")));
        }
        let mut r = self.integrate(f, -half_width, half_width)?;
        r.tail_bound = tail.mass_beyond(half_width);
        r.error_bound += r.tail_bound;
        Ok(r)
    }
}

/// ∫_{−∞}^{∞} f, given `|f(t)| ≤ tail_coefficient / t²` for `|t| ≥ half_width`.
pub fn integrate_line<F>(f: F, tail_coefficient: f64, half_width: f64, tolerance: f64) -> Result<QuadratureResult<f64>>
where
    F: FnMut(f64) -> f64,
{
    Quadrature::new(tolerance).integrate_line(f, TailEnvelope::inverse_square(tail_coefficient), half_width)
}

/// ∫_a^b f with the default panel rule and budget.
pub fn integrate_interval<T, F>(f: F, a: f64, b: f64, tolerance: f64) -> Result<QuadratureResult<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    Quadrature::new(tolerance).integrate(f, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_exact_on_one_panel() {
        let r = integrate_interval(|x: f64| x.powi(10) - 3.0 * x, -1.0, 2.0, 1e-12).unwrap();
        let exact = (2f64.powi(11) + 1.0) / 11.0 - 1.5 * (4.0 - 1.0);
        assert!((r.value - exact).abs() < 1e-12);
        assert_eq!(r.panels, 1);
    }

    #[test]
    fn lorentzian_line_integral() {
        let r = integrate_line(|t| 1.0 / (1.0 + t * t), 1.0, 1e4, 1e-10).unwrap();
        assert!((r.error_bound - 2e-4).abs() < 1e-8);
        assert!((r.value - PI).abs() <= r.error_bound);
        assert!((r.value - PI).abs() <= 2.1e-4);
    }

    #[test]
    fn jump_aligned_with_breakpoint() {
        let f = |t: f64| if t <= 0.3 { 1.0 } else { 0.0 };
        let r = Quadrature::new(1e-12).breakpoints(&[0.3]).integrate(f, 0.0, 1.0).unwrap();
        assert!((r.value - 0.3).abs() < 1e-14);
    }

    #[test]
    fn complex_integrand() {
        let r: QuadratureResult<Complex64> =
            integrate_interval(|t: f64| Complex64::new(0.0, 2.0 * PI * t).exp(), 0.0, 0.25, 1e-13).unwrap();
        let exact = Complex64::new(0.0, 1.0) / Complex64::new(0.0, 2.0 * PI) - 1.0 / Complex64::new(0.0, 2.0 * PI);
        assert!((r.value - exact).norm() < 1e-13);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let r = Quadrature::new(1e-15).panel_budget(10).integrate(|t: f64| (1.0 / (t + 1e-9)).sin(), 0.0, 1.0);
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(integrate_interval(|t: f64| t, 1.0, 0.0, 1e-8).is_err());
        assert!(integrate_line(|t| t, 1.0, -1.0, 1e-8).is_err());
        assert!(integrate_line(|t| t, 1.0, 1.0, 0.0).is_err());
    }
}
