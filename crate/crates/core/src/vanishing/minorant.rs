use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::threshold::{minorant_threshold_ok, threshold_root};
use crate::error::{Error, Result};
use crate::numerics::{Quadrature, QuadratureResult, TailEnvelope};
use crate::paley_wiener::{build_extremal, check_upper, PWExtremal};
use crate::selberg::SelbergPair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MinorantMode {
    /// `c − F(·; α, c(α))`
    Additive,
    /// `c·(1 − F(·; α, 1))`
    Multiplicative,
}

impl MinorantMode {
    pub fn name(self) -> &'static str {
        match self {
            MinorantMode::Additive => "additive",
            MinorantMode::Multiplicative => "multiplicative",
        }
    }
}

impl fmt::Display for MinorantMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MinorantMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "additive" => Ok(MinorantMode::Additive),
            "multiplicative" => Ok(MinorantMode::Multiplicative),
            other => Err(Error::InvalidArgument(format!("unknown minorant mode {other:?}"))),
        }
    }
}

/// A minorant of `χ_[a,b]` vanishing at `point`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VanishingMinorant {
    pub base: SelbergPair,
    pub point: Complex64,
    pub mode: MinorantMode,
    pub spectral_radius: f64,
    pub factor: PWExtremal,
}

pub fn build_minorant(base: SelbergPair, point: Complex64, mode: MinorantMode) -> Result<VanishingMinorant> {
    check_upper(point)?;
    let d = base.delta;
    match mode {
        MinorantMode::Additive => Ok(VanishingMinorant {
            base,
            point,
            mode,
            spectral_radius: d,
            factor: build_extremal(point, base.minorant(point), d)?,
        }),
        MinorantMode::Multiplicative => {
            if !minorant_threshold_ok(point, d) {
                return Err(Error::ThresholdViolated { value: PI * d * point.im, threshold: threshold_root() });
            }
            Ok(VanishingMinorant {
                base,
                point,
                mode,
                spectral_radius: 2.0 * d,
                factor: build_extremal(point, Complex64::new(1.0, 0.0), d)?,
            })
        }
    }
}

impl VanishingMinorant {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let c = self.base.minorant(z);
        let f = self.factor.eval_f(z);
        match self.mode {
            MinorantMode::Additive => c - f,
            MinorantMode::Multiplicative => c * (-f + 1.0),
        }
    }

    pub fn eval_real(&self, t: f64) -> f64 {
        let c = self.base.minorant_real(t);
        let f = self.factor.eval_f_real(t);
        match self.mode {
            MinorantMode::Additive => c - f,
            MinorantMode::Multiplicative => c * (1.0 - f),
        }
    }

    pub fn residual(&self) -> f64 {
        self.eval(self.point).norm()
    }

    /// `∫(χ − minorant)`: `1/δ + κ` in additive mode, `1/δ + ∫c·F` by
    /// quadrature with absolute accuracy `tolerance` otherwise.
    pub fn deficit(&self, tolerance: f64) -> Result<QuadratureResult<f64>> {
        let base = 1.0 / self.base.delta;
        match self.mode {
            MinorantMode::Additive => Ok(QuadratureResult {
                value: base + self.factor.kappa,
                error_bound: 4.0 * f64::EPSILON * (base + self.factor.kappa),
                tail_bound: 0.0,
                panels: 0,
            }),
            MinorantMode::Multiplicative => {
                let reach = self.base.a.abs().max(self.base.b.abs()).max(self.point.norm());
                let mut w = 2.0 * reach + 20.0 / self.base.delta;
                let envelope = |w: f64| TailEnvelope {
                    coefficient: self.base.tail_coefficient(w) * self.factor.tail_coefficient(w),
                    power: 4.0,
                };
                while envelope(w).mass_beyond(w) > 0.1 * tolerance {
                    w *= 2.0;
                }
                let panels = (4.0 * w * self.base.delta).ceil() as usize;
                let mut r = Quadrature::new(0.9 * tolerance).initial_panels(panels).integrate_line(
                    |t| self.base.minorant_real(t) * self.factor.eval_f_real(t),
                    envelope(w),
                    w,
                )?;
                r.value += base;
                Ok(r)
            }
        }
    }
}
