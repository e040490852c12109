//! Minimal-norm element of span{u, v} in an inner-product space subject to
//! `⟨h,u⟩·conj(⟨h,v⟩) = β`.
//!
//! Only the Gram data enters: `η = ‖u‖·‖v‖` and `ν = ⟨u,v⟩`, after rescaling
//! `u` and `v` to equal norm `√η`. The returned coefficients refer to that
//! isotropic pair; a caller whose vectors have squared norms `a ≠ b`
//! multiplies `lambda1` by `(b/a)^¼` and `lambda2` by `(a/b)^¼`.
//!
//! The solution is reported in the canonical phase where `⟨h,v⟩ = √|β|` is
//! real and positive, so `⟨h,u⟩ = β/√|β|`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative Gram defect `(η² − |ν|²)/η²` at or below which the kernels are
/// treated as linearly dependent.
pub const DEPENDENCE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPointProblem {
    pub eta: f64,
    pub nu: Complex64,
    pub beta: Complex64,
    /// `(η² − |ν|²)/η²`, the relative Gram determinant.
    pub independence: f64,
}

impl TwoPointProblem {
    pub fn new(eta: f64, nu: Complex64, beta: Complex64) -> Self {
        let r = nu.norm() / eta;
        Self { eta, nu, beta, independence: (1.0 - r) * (1.0 + r) }
    }

    /// Replace the relative Gram determinant with a value computed without
    /// cancellation by the caller (e.g. from `K − δ` in closed form).
    pub fn with_independence(mut self, independence: f64) -> Self {
        self.independence = independence;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPointSolution {
    pub min_norm_sq: f64,
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    /// `ν/|ν|`, or 1 when `ν = 0`.
    pub gamma: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPointResiduals {
    /// `|⟨h,u⟩·conj(⟨h,v⟩) − β|`
    pub constraint: f64,
    /// `|‖h‖² − min_norm_sq|`
    pub norm: f64,
}

fn validate(p: &TwoPointProblem) -> Result<()> {
    if !(p.eta > 0.0 && p.eta.is_finite()) {
        return Err(Error::InvalidArgument(format!("eta must be positive, got {}", p.eta)));
    }
    if !(p.nu.re.is_finite() && p.nu.im.is_finite() && p.beta.re.is_finite() && p.beta.im.is_finite()) {
        return Err(Error::InvalidArgument("non-finite nu or beta".into()));
    }
    if p.independence.is_nan() || p.independence <= DEPENDENCE_TOLERANCE {
        return Err(Error::DependentKernels { defect: p.independence });
    }
    Ok(())
}

pub fn solve_two_point(problem: &TwoPointProblem) -> Result<TwoPointSolution> {
    validate(problem)?;
    let TwoPointProblem { eta, nu, beta, independence } = *problem;
    let gamma = if nu.norm() > 0.0 { nu / nu.norm() } else { Complex64::new(1.0, 0.0) };
    let zero = Complex64::new(0.0, 0.0);
    if beta == zero {
        return Ok(TwoPointSolution { min_norm_sq: 0.0, lambda1: zero, lambda2: zero, gamma });
    }
    let r = nu / eta;
    let m = beta.norm();
    let den = eta * independence;
    let root = m.sqrt();
    let lambda1 = (beta - r.conj() * m) / (root * den);
    let lambda2 = (m - r * beta) / (root * den);
    let min_norm_sq = (2.0 * (m - (beta * r).re) / den).max(0.0);
    Ok(TwoPointSolution { min_norm_sq, lambda1, lambda2, gamma })
}

/// Inner products `⟨h,u⟩`, `⟨h,v⟩` and `‖h‖²` of `h = λ₁u + λ₂v` from the
/// isotropic Gram matrix.
pub fn gram_expand(eta: f64, nu: Complex64, l1: Complex64, l2: Complex64) -> (Complex64, Complex64, f64) {
    let hu = l1 * eta + l2 * nu.conj();
    let hv = l1 * nu + l2 * eta;
    let norm = (l1.conj() * hu + l2.conj() * hv).re;
    (hu, hv, norm)
}

pub fn verify_two_point(problem: &TwoPointProblem, solution: &TwoPointSolution) -> TwoPointResiduals {
    let (hu, hv, norm) = gram_expand(problem.eta, problem.nu, solution.lambda1, solution.lambda2);
    TwoPointResiduals { constraint: (hu * hv.conj() - problem.beta).norm(), norm: (norm - solution.min_norm_sq).abs() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn orthogonal_case() {
        let p = TwoPointProblem::new(1.0, c(0.0, 0.0), c(1.0, 0.0));
        let s = solve_two_point(&p).unwrap();
        assert_eq!(s.min_norm_sq, 2.0);
        assert_eq!(s.lambda1, c(1.0, 0.0));
        assert_eq!(s.lambda2, c(1.0, 0.0));
        assert_eq!(s.gamma, c(1.0, 0.0));
        let r = verify_two_point(&p, &s);
        assert!(r.constraint <= 1e-14 && r.norm <= 1e-14);
    }

    #[test]
    fn circle_degree_one_case() {
        let p = TwoPointProblem::new(2.5, c(2.0, 0.0), c(1.0, 0.0));
        let s = solve_two_point(&p).unwrap();
        assert!((s.min_norm_sq - 4.0 / 9.0).abs() < 1e-15);
        let r = verify_two_point(&p, &s);
        assert!(r.constraint <= 1e-12 && r.norm <= 1e-12);
    }

    #[test]
    fn unit_beta_real_nu_matches_classical_coefficients() {
        let (eta, nu) = (3.7, 1.2);
        let beta = Complex64::from_polar(1.0, 0.9);
        let s = solve_two_point(&TwoPointProblem::new(eta, c(nu, 0.0), beta)).unwrap();
        let d = eta * eta - nu * nu;
        assert!((s.lambda1 - (beta * eta - nu) / d).norm() < 1e-15);
        assert!((s.lambda2 - (eta - beta * nu) / d).norm() < 1e-15);
    }

    #[test]
    fn perturbation_breaks_constraint() {
        let p = TwoPointProblem::new(2.5, c(2.0, 0.0), c(1.0, 0.0));
        let mut s = solve_two_point(&p).unwrap();
        s.lambda1 += 1e-3;
        assert!(verify_two_point(&p, &s).constraint >= 1e-4);
    }

    #[test]
    fn zero_beta_gives_zero_function() {
        let s = solve_two_point(&TwoPointProblem::new(2.0, c(1.0, 0.5), c(0.0, 0.0))).unwrap();
        assert_eq!(s.min_norm_sq, 0.0);
        assert_eq!(s.lambda1, c(0.0, 0.0));
    }

    #[test]
    fn dependence_is_detected() {
        let e = solve_two_point(&TwoPointProblem::new(1.0, c(1.0, 0.0), c(1.0, 0.0)));
        assert!(matches!(e, Err(Error::DependentKernels { .. })));
        let e = solve_two_point(&TwoPointProblem::new(1.0, c(0.0, 1.0 - 1e-14), c(1.0, 0.0)));
        assert!(matches!(e, Err(Error::DependentKernels { .. })));
        assert!(solve_two_point(&TwoPointProblem::new(0.0, c(0.0, 0.0), c(1.0, 0.0))).is_err());
    }
}
