use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::TailEnvelope;
use crate::paley_wiener::{build_extremal, check_upper, PWExtremal};
use crate::selberg::SelbergPair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MajorantMode {
    /// `G_α = C + F(·; α, −C(α))`
    Additive,
    /// `C_α = C·(1 + F(·; α, −1))`
    Multiplicative,
    /// `C·Π_n (1 + F(w_n ·; w_n α_n, −1))`
    Multipoint,
}

impl MajorantMode {
    pub fn name(self) -> &'static str {
        match self {
            MajorantMode::Additive => "additive",
            MajorantMode::Multiplicative => "multiplicative",
            MajorantMode::Multipoint => "multipoint",
        }
    }
}

impl fmt::Display for MajorantMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MajorantMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "additive" => Ok(MajorantMode::Additive),
            "multiplicative" => Ok(MajorantMode::Multiplicative),
            "multipoint" => Ok(MajorantMode::Multipoint),
            other => Err(Error::InvalidArgument(format!("unknown majorant mode {other:?}"))),
        }
    }
}

/// A majorant of `χ_[a,b]` vanishing at every listed point.
#[derive(Debug, Clone, PartialEq)]
pub struct VanishingMajorant {
    pub base: SelbergPair,
    pub points: Vec<Complex64>,
    pub mode: MajorantMode,
    /// Radius of the transform support.
    pub spectral_radius: f64,
    /// Dilation `w_n` of each factor; all 1 outside multipoint mode.
    pub weights: Vec<f64>,
    /// `F(·; w_n α_n, β_n, δ)`, evaluated at `w_n z`.
    pub factors: Vec<PWExtremal>,
}

pub fn build_majorant(base: SelbergPair, points: &[Complex64], mode: MajorantMode) -> Result<VanishingMajorant> {
    for &p in points {
        check_upper(p)?;
    }
    match mode {
        MajorantMode::Additive | MajorantMode::Multiplicative if points.len() != 1 => {
            Err(Error::ModeArity { mode: mode.name(), expected: "exactly 1", got: points.len() })
        }
        MajorantMode::Multipoint if points.is_empty() => {
            Err(Error::ModeArity { mode: mode.name(), expected: "at least 1", got: 0 })
        }
        MajorantMode::Additive => {
            let alpha = points[0];
            let factor = build_extremal(alpha, -base.majorant(alpha), base.delta)?;
            Ok(VanishingMajorant {
                base,
                points: points.to_vec(),
                mode,
                spectral_radius: base.delta,
                weights: vec![1.0],
                factors: vec![factor],
            })
        }
        MajorantMode::Multiplicative => product(base, points, &[1.0], mode),
        MajorantMode::Multipoint => {
            let w = 1.0 / points.len() as f64;
            product(base, points, &vec![w; points.len()], mode)
        }
    }
}

/// Multipoint majorant with convex weights `w_n` in place of `1/N`.
pub fn build_multipoint(base: SelbergPair, points: &[Complex64], weights: &[f64]) -> Result<VanishingMajorant> {
    for &p in points {
        check_upper(p)?;
    }
    if points.is_empty() {
        return Err(Error::ModeArity { mode: MajorantMode::Multipoint.name(), expected: "at least 1", got: 0 });
    }
    if weights.len() != points.len() {
        return Err(Error::InvalidArgument(format!("{} weights for {} points", weights.len(), points.len())));
    }
    let total: f64 = weights.iter().sum();
    if weights.iter().any(|&w| !(w > 0.0)) || (total - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidArgument(format!("weights must be positive and sum to 1, got {weights:?}")));
    }
    product(base, points, weights, MajorantMode::Multipoint)
}

fn product(base: SelbergPair, points: &[Complex64], weights: &[f64], mode: MajorantMode) -> Result<VanishingMajorant> {
    let minus_one = Complex64::new(-1.0, 0.0);
    let factors = points
        .iter()
        .zip(weights)
        .map(|(&p, &w)| build_extremal(p * w, minus_one, base.delta))
        .collect::<Result<Vec<_>>>()?;
    Ok(VanishingMajorant {
        base,
        points: points.to_vec(),
        mode,
        spectral_radius: 2.0 * base.delta,
        weights: weights.to_vec(),
        factors,
    })
}

impl VanishingMajorant {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let c = self.base.majorant(z);
        match self.mode {
            MajorantMode::Additive => c + self.factors[0].eval_f(z),
            _ => {
                let g = self
                    .factors
                    .iter()
                    .zip(&self.weights)
                    .fold(Complex64::new(1.0, 0.0), |acc, (f, &w)| acc * (f.eval_f(z * w) + 1.0));
                c * g
            }
        }
    }

    pub fn eval_real(&self, t: f64) -> f64 {
        match self.mode {
            MajorantMode::Additive => self.base.majorant_real(t) + self.factors[0].eval_f_real(t),
            _ => self.base.majorant_real(t) * (1.0 + self.product_excess(t)),
        }
    }

    /// `Π(1 + F_n) − 1` on the real line, accumulated without cancellation.
    pub(crate) fn product_excess(&self, t: f64) -> f64 {
        self.factors.iter().zip(&self.weights).fold(0.0, |acc, (f, &w)| {
            let v = f.eval_f_real(w * t);
            acc + v + acc * v
        })
    }

    /// `|eval(α_n)|` for every prescribed point.
    pub fn residuals(&self) -> Vec<f64> {
        self.points.iter().map(|&p| self.eval(p).norm()).collect()
    }

    /// Envelope of `C·(Π(1 + F_n) − 1)` valid for `|t| ≥ half_width`.
    ///
    /// With `F_n(w_n t) ≤ c_n/(w_n t)²` there, `Π(1 + F_n) − 1` is at most
    /// `(Σ c_n/w_n²)/t² · Π(1 + c_n/(w_n W)²)`.
    pub(crate) fn product_tail(&self, half_width: f64) -> TailEnvelope {
        let c = self.base.tail_coefficient(half_width);
        let mut sum = 0.0;
        let mut growth = 1.0;
        for (f, &w) in self.factors.iter().zip(&self.weights) {
            let cn = f.tail_coefficient(w * half_width) / (w * w);
            sum += cn;
            growth *= 1.0 + cn / (half_width * half_width);
        }
        TailEnvelope { coefficient: c * sum * growth, power: 4.0 }
    }

    /// Half-width beyond which every ingredient is in its tail regime.
    pub(crate) fn core_half_width(&self) -> f64 {
        let mut reach = self.base.a.abs().max(self.base.b.abs());
        let mut scale = 1.0 / self.base.delta;
        for (p, &w) in self.points.iter().zip(&self.weights) {
            reach = reach.max(p.norm());
            scale = scale.max(1.0 / (w * self.base.delta));
        }
        2.0 * reach + 20.0 * scale
    }
}
