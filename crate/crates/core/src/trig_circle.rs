//! Nonnegative Laurent polynomials `F = p·p*` of degree `N` on the unit
//! circle with least mean and a prescribed value `F(α) = β`.
//!
//! `𝒫_N` carries the Haar inner product, with kernel
//! `K(ω,z) = Σ_{n≤N} zⁿω̄ⁿ`. The extremal `p` lies in the span of `K(α,·)`
//! and `K(1/ᾱ,·)`, whose Gram data are `K(α,α) = Σ|α|²ⁿ`,
//! `K(1/ᾱ,1/ᾱ) = Σ|α|⁻²ⁿ` and `K(α,1/ᾱ) = N + 1`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rkhs::{solve_two_point, TwoPointProblem, DEPENDENCE_TOLERANCE};

pub fn circle_kernel(degree: usize, omega: Complex64, z: Complex64) -> Complex64 {
    let w = z * omega.conj();
    let one = Complex64::new(1.0, 0.0);
    if (w - one).norm() < 1e-8 || w.norm() > 1e8 {
        // Horner form: no cancellation near w = 1, no overflow of w^{N+1}.
        (0..=degree).fold(Complex64::new(0.0, 0.0), |acc, _| acc * w + one)
    } else {
        (one - w.powu(degree as u32 + 1)) / (one - w)
    }
}

/// `Σ_{n≤N} r^{2n}`.
fn power_sum(degree: usize, r: f64) -> f64 {
    let r2 = r * r;
    (0..=degree).fold(0.0, |acc, _| acc * r2 + 1.0)
}

/// `K(α,α)·K(1/ᾱ,1/ᾱ) − (N+1)²`, written as
/// `Σ_{k=1}^{N} (N+1−k)(2 sinh(k ln|α|))²` to avoid cancellation near the circle.
pub fn trig_gram_defect(degree: usize, alpha: Complex64) -> f64 {
    let l = alpha.norm().ln();
    (1..=degree)
        .map(|k| {
            let s = 2.0 * (k as f64 * l).sinh();
            (degree + 1 - k) as f64 * s * s
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrigExtremal {
    pub degree: usize,
    pub alpha: Complex64,
    pub beta: Complex64,
    /// Coefficients `c_0, …, c_N` of `p(z) = λ₁K(α,z) + λ₂K(1/ᾱ,z)`.
    pub p_coeffs: Vec<Complex64>,
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    /// `∫F dσ`, the minimum over all admissible `F`.
    pub mean: f64,
}

pub fn build_trig_extremal(degree: usize, alpha: Complex64, beta: Complex64) -> Result<TrigExtremal> {
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    if !(beta.re.is_finite() && beta.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("beta must be finite, got {beta}")));
    }
    let r = alpha.norm();
    if r == 0.0 || (r - 1.0).abs() <= 1e-9 {
        return Err(Error::DependentKernels { defect: if r == 0.0 { 0.0 } else { (r - 1.0).abs() } });
    }
    let a = power_sum(degree, r);
    let b = power_sum(degree, 1.0 / r);
    let eta = (a * b).sqrt();
    let nu = (degree + 1) as f64;
    let independence = trig_gram_defect(degree, alpha) / (a * b);
    if !independence.is_finite() || independence <= DEPENDENCE_TOLERANCE {
        return Err(Error::DependentKernels { defect: independence });
    }
    let problem = TwoPointProblem::new(eta, Complex64::new(nu, 0.0), beta).with_independence(independence);
    let solution = solve_two_point(&problem)?;
    let scale = (b / a).sqrt().sqrt();
    let lambda1 = solution.lambda1 * scale;
    let lambda2 = solution.lambda2 / scale;
    // K(α,z) = Σ zⁿᾱⁿ and K(1/ᾱ,z) = Σ zⁿα⁻ⁿ.
    let (ac, ai) = (alpha.conj(), alpha.inv());
    let p_coeffs = (0..=degree as u32).map(|n| lambda1 * ac.powu(n) + lambda2 * ai.powu(n)).collect();
    Ok(TrigExtremal { degree, alpha, beta, p_coeffs, lambda1, lambda2, mean: solution.min_norm_sq })
}

impl TrigExtremal {
    pub fn eval_p(&self, z: Complex64) -> Complex64 {
        self.p_coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Laurent coefficients `f_{−N}, …, f_N` of `F`, with
    /// `f_k = Σ_n c_{n+k} c̄_n`.
    pub fn laurent_coeffs(&self) -> Vec<Complex64> {
        let n = self.degree as isize;
        (-n..=n)
            .map(|k| {
                (0..=n)
                    .filter(|&m| (0..=n).contains(&(m + k)))
                    .map(|m| self.p_coeffs[(m + k) as usize] * self.p_coeffs[m as usize].conj())
                    .sum()
            })
            .collect()
    }

    /// Constant Laurent coefficient `Σ|c_n|²`, equal to the mean of `F`.
    pub fn constant_coeff(&self) -> f64 {
        self.p_coeffs.iter().map(|c| c.norm_sqr()).sum()
    }
}

/// `F(z) = p(z)·conj(p(1/z̄))`.
pub fn eval_trig_f(extremal: &TrigExtremal, z: Complex64) -> Result<Complex64> {
    if z.norm() == 0.0 {
        return Err(Error::Pole { function: "F", at: z });
    }
    let reflected = z.conj().inv();
    Ok(extremal.eval_p(z) * extremal.eval_p(reflected).conj())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn kernel_examples() {
        let a = c(2.0, 0.7);
        for n in 1..6 {
            let v = circle_kernel(n, a, a.conj().inv());
            assert!((v - (n as f64 + 1.0)).norm() < 1e-12 * n as f64);
            assert_eq!(circle_kernel(n, c(0.0, 0.0), c(3.0, -1.0)), c(1.0, 0.0));
        }
        assert!((circle_kernel(1, c(2.0, 0.0), c(2.0, 0.0)) - 5.0).norm() < 1e-15);
    }

    #[test]
    fn kernel_matches_direct_sum() {
        let (w, z) = (c(0.3, -1.1), c(-0.8, 0.45));
        for n in [1, 3, 8] {
            let direct: Complex64 = (0..=n as u32).map(|k| z.powu(k) * w.conj().powu(k)).sum();
            assert!((circle_kernel(n, w, z) - direct).norm() < 1e-13 * direct.norm().max(1.0));
        }
    }

    #[test]
    fn gram_defect_matches_direct_form() {
        for &(n, r) in &[(1usize, 2.0), (3, 0.5), (4, 1.3)] {
            let direct = power_sum(n, r) * power_sum(n, 1.0 / r) - ((n + 1) * (n + 1)) as f64;
            let stable = trig_gram_defect(n, c(r, 0.0));
            assert!((direct - stable).abs() < 1e-12 * direct.abs().max(1.0));
        }
    }

    #[test]
    fn dependent_inputs() {
        assert!(matches!(build_trig_extremal(2, c(0.6, 0.8), c(1.0, 0.0)), Err(Error::DependentKernels { .. })));
        assert!(matches!(build_trig_extremal(2, c(0.0, 0.0), c(1.0, 0.0)), Err(Error::DependentKernels { .. })));
        let e = build_trig_extremal(1, c(2.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!(matches!(eval_trig_f(&e, c(0.0, 0.0)), Err(Error::Pole { .. })));
    }
}
