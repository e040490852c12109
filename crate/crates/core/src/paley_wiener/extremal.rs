use std::f64::consts::PI;

use num_complex::Complex64;

use super::kernel::{check_delta, check_upper, PWKernel};
use super::spectrum::{SpectrumForm, SpectrumTerm};
use crate::error::{Error, Result};
use crate::numerics::{sinhc_minus_one, Quadrature, QuadratureResult, TailEnvelope};
use crate::rkhs::{solve_two_point, TwoPointProblem};

/// The unique nonnegative band-limited `F = U·U*` of least integral with
/// `F(α) = β`, where `U = λ₁K(α,·) + λ₂K(ᾱ,·)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PWExtremal {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub delta: f64,
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    /// `∫F` over the real line.
    pub kappa: f64,
}

pub fn build_extremal(alpha: Complex64, beta: Complex64, delta: f64) -> Result<PWExtremal> {
    check_upper(alpha)?;
    check_delta(delta)?;
    if !(beta.re.is_finite() && beta.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("beta must be finite, got {beta}")));
    }
    let kernel = PWKernel { delta };
    let y = alpha.im;
    let k = kernel.diagonal(y);
    if !k.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "2*pi*Im(alpha)*delta = {} overflows double precision",
            2.0 * PI * y * delta
        )));
    }
    let excess = kernel.diagonal_excess(y);
    let independence = (excess / k) * ((k + delta) / k);
    let problem = TwoPointProblem::new(k, Complex64::new(delta, 0.0), beta).with_independence(independence);
    let solution = solve_two_point(&problem)?;
    Ok(PWExtremal {
        alpha,
        beta,
        delta,
        lambda1: solution.lambda1,
        lambda2: solution.lambda2,
        kappa: kappa_from_parts(beta, delta, k, excess),
    })
}

/// `2(|β|K − δ Re β)/(K² − δ²)`, rearranged so that no difference of nearly
/// equal quantities is formed.
fn kappa_from_parts(beta: Complex64, delta: f64, k: f64, excess: f64) -> f64 {
    let m = beta.norm();
    if m == 0.0 {
        return 0.0;
    }
    let phase_gap = if beta.re > 0.0 { beta.im * beta.im / (m + beta.re) } else { m - beta.re };
    2.0 * (m * excess + delta * phase_gap) / (excess * (k + delta))
}

/// `κ(α, β, δ)`, the least integral over all admissible functions.
pub fn kappa_value(alpha: Complex64, beta: Complex64, delta: f64) -> Result<f64> {
    Ok(build_extremal(alpha, beta, delta)?.kappa)
}

/// Closed form of `κ` for real `β = b`: `4πy|b| / (sinh(2πyδ) + sgn(b)·2πyδ)`.
pub fn kappa_real_beta(alpha: Complex64, b: f64, delta: f64) -> Result<f64> {
    check_upper(alpha)?;
    check_delta(delta)?;
    if b == 0.0 {
        return Ok(0.0);
    }
    let s = sinhc_minus_one(2.0 * PI * alpha.im * delta);
    // sinh u ∓ u = u·(s + 1 ∓ 1) with u = 2πyδ, so the 4πy cancels to 2/δ.
    let shape = if b < 0.0 { s } else { s + 2.0 };
    Ok(2.0 * b.abs() / (delta * shape))
}

impl PWExtremal {
    pub fn kernel(&self) -> PWKernel {
        PWKernel { delta: self.delta }
    }

    pub fn eval_u(&self, z: Complex64) -> Complex64 {
        let k = self.kernel();
        self.lambda1 * k.eval(self.alpha, z) + self.lambda2 * k.eval(self.alpha.conj(), z)
    }

    pub fn eval_f(&self, z: Complex64) -> Complex64 {
        self.eval_u(z) * self.eval_u(z.conj()).conj()
    }

    /// `F(t) = |U(t)|²` on the real line.
    pub fn eval_f_real(&self, t: f64) -> f64 {
        self.eval_u(Complex64::new(t, 0.0)).norm_sqr()
    }

    /// Upper bound for `sup |F|` on the real line (`|U(t)|² ≤ δ‖U‖²`).
    pub fn sup_bound(&self) -> f64 {
        self.delta * self.kappa
    }

    pub fn transform(&self) -> SpectrumForm {
        transform_closed_form(self)
    }

    /// Coefficient `c` with `F(t) ≤ c/t²` for `|t| ≥ half_width`.
    ///
    /// Uses `|K(α,t)| ≤ cosh(πδ Im α)/(π|t − Re α|)` for both kernels.
    pub fn tail_coefficient(&self, half_width: f64) -> f64 {
        let x = self.alpha.re.abs();
        let m = (self.lambda1.norm() + self.lambda2.norm()) * (PI * self.delta * self.alpha.im).cosh();
        let shrink = (1.0 - x / half_width).max(0.0);
        if shrink == 0.0 {
            return f64::INFINITY;
        }
        m * m / (PI * PI * shrink * shrink)
    }

    /// `∫F` by quadrature on `[−W, W]` with the envelope tail added to the
    /// error bound only.
    pub fn integral_envelope(&self, tolerance: f64, half_width: f64) -> Result<QuadratureResult<f64>> {
        let tail = TailEnvelope::inverse_square(self.tail_coefficient(half_width));
        let panels = (2.0 * half_width * self.delta).ceil().max(1.0) as usize;
        Quadrature::new(tolerance).initial_panels(panels).integrate_line(|t| self.eval_f_real(t), tail, half_width)
    }

    /// `∫F` over the line with absolute accuracy `tolerance`.
    ///
    /// Quadrature on `[−W, W]` plus [`PWExtremal::tail_beyond`].
    pub fn integral(&self, tolerance: f64) -> Result<QuadratureResult<f64>> {
        if !(tolerance > 0.0) {
            return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tolerance}")));
        }
        if self.is_zero() {
            return Ok(QuadratureResult { value: 0.0, error_bound: 0.0, tail_bound: 0.0, panels: 0 });
        }
        let w = self.tight_half_width(0.1 * tolerance);
        let panels = (2.0 * w * self.delta).ceil().max(1.0) as usize;
        let core = Quadrature::new(0.5 * tolerance).initial_panels(panels).integrate(|t| self.eval_f_real(t), -w, w)?;
        let tail = self.tail_beyond(w, 0.2 * tolerance)?;
        Ok(QuadratureResult {
            value: core.value + tail.value,
            error_bound: core.error_bound + tail.error_bound,
            tail_bound: tail.tail_bound,
            panels: core.panels + tail.panels,
        })
    }

    fn is_zero(&self) -> bool {
        self.lambda1.norm() == 0.0 && self.lambda2.norm() == 0.0
    }

    /// Beyond `|t| = W` the integrand splits as
    /// `(|P₊|² + |P₋|² − 2 Re(e^{2πiδt} P₊ conj P₋)) / 4π²` with rational `P±`.
    fn tail_parts(&self) -> ([Complex64; 2], [Complex64; 2], f64) {
        let a = self.alpha;
        let phase = |c: Complex64, sign: f64| (Complex64::new(0.0, sign * PI * self.delta) * c).exp();
        let plus = [self.lambda1 * phase(a.conj(), -1.0), self.lambda2 * phase(a, -1.0)];
        let minus = [self.lambda1 * phase(a.conj(), 1.0), self.lambda2 * phase(a, 1.0)];
        let s_bound = (plus[0].norm() + plus[1].norm()) * (minus[0].norm() + minus[1].norm());
        (plus, minus, s_bound)
    }

    /// Bound on the oscillating part of `∫_{|t|>W} F`, from one integration
    /// by parts.
    fn oscillating_tail(&self, half_width: f64) -> f64 {
        let (_, _, s_bound) = self.tail_parts();
        let r = self.alpha.norm();
        let omega = 2.0 * PI * self.delta;
        let gap = half_width - r;
        2.0 * (2.0 / (4.0 * PI * PI)) * 2.0 * s_bound / (omega * gap * gap)
    }

    /// Smallest convenient `W` whose oscillating tail bound is below `bound`.
    pub(crate) fn tight_half_width(&self, bound: f64) -> f64 {
        let r = self.alpha.norm();
        let mut w = (4.0 * r + 1.0).max(10.0 / self.delta);
        while self.oscillating_tail(w) > bound {
            w *= 2.0;
        }
        w
    }

    /// `∫_{|t|>W} F`: the non-oscillating part integrated after `t = ±1/s`,
    /// the oscillating part entering `error_bound` and `tail_bound` only.
    /// Requires `W > |α|`.
    pub(crate) fn tail_beyond(&self, half_width: f64, tolerance: f64) -> Result<QuadratureResult<f64>> {
        let (plus, minus, _) = self.tail_parts();
        let poles = [self.alpha.conj(), self.alpha];
        let rational = |coeffs: &[Complex64; 2], s: f64, sign: f64| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (c, p) in coeffs.iter().zip(poles.iter()) {
                acc += c / (Complex64::new(1.0, 0.0) - p * (sign * s));
            }
            acc.norm_sqr()
        };
        let smooth = Quadrature::new(tolerance).integrate(
            |s| {
                (rational(&plus, s, 1.0)
                    + rational(&minus, s, 1.0)
                    + rational(&plus, s, -1.0)
                    + rational(&minus, s, -1.0))
                    / (4.0 * PI * PI)
            },
            0.0,
            1.0 / half_width,
        )?;
        let osc = self.oscillating_tail(half_width);
        Ok(QuadratureResult {
            value: smooth.value,
            error_bound: smooth.error_bound + osc,
            tail_bound: osc,
            panels: smooth.panels,
        })
    }
}

/// Closed-form transform of `F`, supported in `[−δ, δ]`.
///
/// `F̂(t) = (|λ₁|²+|λ₂|²)·G(t) + (λ̄₁λ₂ e^{−2πiαt} + λ₁λ̄₂ e^{−2πiᾱt})(δ−|t|)₊`
/// with `G(t) = e^{−2πi t Re α} sinh(2π Im α (δ−|t|)₊)/(2π Im α)`.
pub fn transform_closed_form(extremal: &PWExtremal) -> SpectrumForm {
    let a = extremal.alpha;
    let (l1, l2) = (extremal.lambda1, extremal.lambda2);
    SpectrumForm {
        delta: extremal.delta,
        terms: vec![
            SpectrumTerm {
                coeff: Complex64::new(l1.norm_sqr() + l2.norm_sqr(), 0.0),
                phase_freq: a + a.conj(),
                spread: a - a.conj(),
            },
            SpectrumTerm { coeff: l1.conj() * l2, phase_freq: a * 2.0, spread: Complex64::new(0.0, 0.0) },
            SpectrumTerm { coeff: l1 * l2.conj(), phase_freq: a.conj() * 2.0, spread: Complex64::new(0.0, 0.0) },
        ],
    }
}
