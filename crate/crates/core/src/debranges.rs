//! De Branges spaces `H_E`: structure functions, their reproducing kernels,
//! and the two-point extremal problem in the weighted norm
//! `‖F‖²_E = ∫|F(t)|² |E(t)|⁻² dt`.
//!
//! The kernel is
//! `K_E(ω,z) = (E(z)conj E(ω) − E*(z)conj E*(ω)) / (2πi(ω̄ − z))`,
//! equivalently `(B(z)conj A(ω) − A(z)conj B(ω)) / (π(z − ω̄))` with
//! `A = (E + E*)/2` and `B = i(E − E*)/2`.
//!
//! Built-in structure functions have closed-form kernels. A user-supplied
//! `E` is evaluated through the ratio above; within `|z − ω̄| < 1e-5(1 + |ω|)`
//! the ratio is replaced by its first-order Taylor expansion about `ω̄`, with
//! derivatives of the numerator from five-point centered differences at step
//! `h = 1e-3(1 + |ω|)`. The truncation error is `O(h⁴)` in the derivatives
//! and `O(|z − ω̄|²)` in the expansion. The caller asserts that a custom `E`
//! is a de Branges function of Pólya class; only the Hermite–Biehler
//! inequality is sampled.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{csinc, sinhc_minus_one};
use crate::paley_wiener::check_upper;
use crate::rkhs::{solve_two_point, TwoPointProblem};

/// Relative Gram defect below which `K_E(α,·)` and `K_E(ᾱ,·)` count as
/// dependent.
pub const DB_DEPENDENCE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Descriptor {
    /// `E(z) = e^{−2πibz}`, `b > 0`: the Paley–Wiener space of type `2πb`.
    Exponential {
        b: f64,
    },
    /// `E(z) = z + i`: a one-dimensional space of constants.
    Linear,
    /// `E(z) = (z − ω)e^{−2πibz}` with `Im ω < 0`, `b > 0`.
    LinearExponential {
        b: f64,
        omega: Complex64,
    },
    Custom,
}

type Evaluator = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

#[derive(Clone)]
pub struct StructureFunction {
    pub descriptor: Descriptor,
    e: Evaluator,
}

impl fmt::Debug for StructureFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StructureFunction").field("descriptor", &self.descriptor).finish()
    }
}

fn check_b(b: f64) -> Result<()> {
    if b > 0.0 && b.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("b must be positive, got {b}")))
    }
}

fn i_times(z: Complex64) -> Complex64 {
    Complex64::new(-z.im, z.re)
}

impl StructureFunction {
    pub fn exponential(b: f64) -> Result<Self> {
        check_b(b)?;
        Ok(Self {
            descriptor: Descriptor::Exponential { b },
            e: Arc::new(move |z: Complex64| (i_times(z) * (-2.0 * PI * b)).exp()),
        })
    }

    pub fn linear() -> Self {
        Self { descriptor: Descriptor::Linear, e: Arc::new(|z: Complex64| z + Complex64::new(0.0, 1.0)) }
    }

    pub fn linear_exponential(b: f64, omega: Complex64) -> Result<Self> {
        check_b(b)?;
        if !(omega.im < 0.0) {
            return Err(Error::InvalidArgument(format!("the zero of E must lie in the lower half-plane, got {omega}")));
        }
        Ok(Self {
            descriptor: Descriptor::LinearExponential { b, omega },
            e: Arc::new(move |z: Complex64| (z - omega) * (i_times(z) * (-2.0 * PI * b)).exp()),
        })
    }

    /// A caller-supplied `E`, asserted to be a de Branges function.
    pub fn custom<F>(e: F) -> Self
    where
        F: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    {
        Self { descriptor: Descriptor::Custom, e: Arc::new(e) }
    }

    pub fn eval_e(&self, z: Complex64) -> Complex64 {
        (self.e)(z)
    }

    /// `E*(z) = conj(E(z̄))`.
    pub fn eval_e_star(&self, z: Complex64) -> Complex64 {
        (self.e)(z.conj()).conj()
    }

    pub fn eval_a(&self, z: Complex64) -> Complex64 {
        (self.eval_e(z) + self.eval_e_star(z)) * 0.5
    }

    pub fn eval_b(&self, z: Complex64) -> Complex64 {
        i_times(self.eval_e(z) - self.eval_e_star(z)) * 0.5
    }

    /// Samples `|E(z̄)| < |E(z)|` on a fixed 10 × 10 grid in
    /// `[−5, 5] × [0.1, 3]` and reports the largest ratio `|E(z̄)|/|E(z)|`.
    pub fn hermite_biehler_check(&self) -> HermiteBiehler {
        let mut worst: f64 = 0.0;
        for i in 0..10 {
            for j in 0..10 {
                let z = Complex64::new(-5.0 + 10.0 * i as f64 / 9.0, 0.1 + 2.9 * j as f64 / 9.0);
                let ratio = self.eval_e(z.conj()).norm() / self.eval_e(z).norm();
                worst = worst.max(if ratio.is_nan() { f64::INFINITY } else { ratio });
            }
        }
        HermiteBiehler { passed: worst < 1.0, worst_ratio: worst }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteBiehler {
    pub passed: bool,
    pub worst_ratio: f64,
}

#[derive(Debug, Clone)]
pub struct DBKernelData {
    pub structure: StructureFunction,
}

impl DBKernelData {
    pub fn new(structure: StructureFunction) -> Self {
        Self { structure }
    }

    /// `E(z)conj E(ω) − E*(z)conj E*(ω)`.
    fn numerator(&self, omega: Complex64, z: Complex64) -> Complex64 {
        let s = &self.structure;
        s.eval_e(z) * s.eval_e(omega).conj() - s.eval_e_star(z) * s.eval_e_star(omega).conj()
    }

    /// Kernel from the generic ratio, for any structure function.
    pub fn kernel_generic(&self, omega: Complex64, z: Complex64) -> Complex64 {
        let pole = omega.conj();
        let s = z - pole;
        let two_pi_i = Complex64::new(0.0, 2.0 * PI);
        if s.norm() >= 1e-5 * (1.0 + omega.norm()) {
            return self.numerator(omega, z) / (two_pi_i * (-s));
        }
        let h = 1e-3 * (1.0 + omega.norm());
        let n = |k: f64| self.numerator(omega, pole + h * k);
        let (m2, m1, p1, p2) = (n(-2.0), n(-1.0), n(1.0), n(2.0));
        let first = (m2 - p2 + (p1 - m1) * 8.0) / (12.0 * h);
        let second = (-(m2 + p2) + (m1 + p1) * 16.0 - n(0.0) * 30.0) / (12.0 * h * h);
        -(first + second * s * 0.5) / two_pi_i
    }
}

/// `K_E(ω, z)`.
pub fn db_kernel(data: &DBKernelData, omega: Complex64, z: Complex64) -> Complex64 {
    match data.structure.descriptor {
        Descriptor::Exponential { b } => csinc((z - omega.conj()) * (2.0 * PI * b)) * (2.0 * b),
        Descriptor::Linear => Complex64::new(1.0 / PI, 0.0),
        Descriptor::LinearExponential { b, omega: w0 } => {
            let s = z - omega.conj();
            let spread = (z - w0) * (omega - w0).conj();
            let pw = csinc(s * (2.0 * PI * b)) * (2.0 * b);
            spread * pw + (i_times(s) * (2.0 * PI * b)).exp() * (-w0.im / PI)
        }
        Descriptor::Custom => data.kernel_generic(omega, z),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DependenceReport {
    pub independent: bool,
    /// `K_E(α,α)·K_E(ᾱ,ᾱ) − |K_E(α,ᾱ)|²`.
    pub gram_defect: f64,
    /// `gram_defect / (K_E(α,α)·K_E(ᾱ,ᾱ))`.
    pub relative_defect: f64,
}

struct Gram {
    a: f64,
    b: f64,
    nu: Complex64,
    defect: f64,
}

fn gram(data: &DBKernelData, alpha: Complex64) -> Gram {
    let a = db_kernel(data, alpha, alpha).re;
    let b = db_kernel(data, alpha.conj(), alpha.conj()).re;
    let nu = db_kernel(data, alpha, alpha.conj());
    let defect = match data.structure.descriptor {
        // K(α,α) = K(ᾱ,ᾱ) = 2b(1 + s) and ν = 2b, so the defect is
        // (2b)² s (s + 2) without cancellation.
        Descriptor::Exponential { b: bw } => {
            let s = sinhc_minus_one(4.0 * PI * bw * alpha.im);
            4.0 * bw * bw * s * (s + 2.0)
        }
        _ => a * b - nu.norm_sqr(),
    };
    Gram { a, b, nu, defect }
}

pub fn db_dependence_check(data: &DBKernelData, alpha: Complex64) -> DependenceReport {
    let g = gram(data, alpha);
    let relative = g.defect / (g.a * g.b);
    DependenceReport {
        independent: relative.is_finite() && relative > DB_DEPENDENCE_TOLERANCE,
        gram_defect: g.defect,
        relative_defect: relative,
    }
}

/// Minimal `‖U‖²_E = ∫F|E|⁻²` with `F = U·U*`, `F(α) = β`, and
/// `U = λ₁K_E(α,·) + λ₂K_E(ᾱ,·)`.
#[derive(Debug, Clone)]
pub struct DBExtremal {
    pub data: DBKernelData,
    pub alpha: Complex64,
    pub beta: Complex64,
    pub bound: f64,
    pub lambda1: Complex64,
    pub lambda2: Complex64,
}

pub fn db_extremal_bound(data: &DBKernelData, alpha: Complex64, beta: Complex64) -> Result<DBExtremal> {
    check_upper(alpha)?;
    if !(beta.re.is_finite() && beta.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("beta must be finite, got {beta}")));
    }
    let g = gram(data, alpha);
    let relative = g.defect / (g.a * g.b);
    if !(relative.is_finite() && relative > DB_DEPENDENCE_TOLERANCE) {
        return Err(Error::DependentKernels { defect: relative });
    }
    let eta = (g.a * g.b).sqrt();
    let problem = TwoPointProblem::new(eta, g.nu, beta).with_independence(relative);
    let solution = solve_two_point(&problem)?;
    // Back from the equal-norm pair to K_E(α,·), K_E(ᾱ,·).
    let scale = (g.b / g.a).sqrt().sqrt();
    Ok(DBExtremal {
        data: data.clone(),
        alpha,
        beta,
        bound: solution.min_norm_sq,
        lambda1: solution.lambda1 * scale,
        lambda2: solution.lambda2 / scale,
    })
}

impl DBExtremal {
    pub fn eval_u(&self, z: Complex64) -> Complex64 {
        self.lambda1 * db_kernel(&self.data, self.alpha, z) + self.lambda2 * db_kernel(&self.data, self.alpha.conj(), z)
    }

    pub fn eval_f(&self, z: Complex64) -> Complex64 {
        self.eval_u(z) * self.eval_u(z.conj()).conj()
    }

    /// `F(t)/|E(t)|²` on the real line.
    pub fn weighted_density(&self, t: f64) -> f64 {
        let z = Complex64::new(t, 0.0);
        self.eval_u(z).norm_sqr() / self.data.structure.eval_e(z).norm_sqr()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn a_and_b_are_real_on_the_line() {
        let s = StructureFunction::linear_exponential(0.7, c(0.3, -1.2)).unwrap();
        for &t in &[-3.0, 0.0, 0.4, 2.5] {
            assert!(s.eval_a(c(t, 0.0)).im.abs() < 1e-14);
            assert!(s.eval_b(c(t, 0.0)).im.abs() < 1e-14);
        }
    }

    #[test]
    fn linear_components() {
        let s = StructureFunction::linear();
        let z = c(0.7, -2.0);
        assert!((s.eval_a(z) - z).norm() < 1e-15);
        assert!((s.eval_b(z) + 1.0).norm() < 1e-15);
    }

    #[test]
    fn constructor_validation() {
        assert!(StructureFunction::exponential(0.0).is_err());
        assert!(StructureFunction::linear_exponential(1.0, c(0.0, 1.0)).is_err());
    }

    #[test]
    fn generic_kernel_limit_at_conjugate_point() {
        let data = DBKernelData::new(StructureFunction::exponential(0.5).unwrap());
        let w = c(0.3, 0.8);
        let exact = db_kernel(&data, w, w.conj());
        let approx = data.kernel_generic(w, w.conj());
        assert!((exact - approx).norm() < 1e-9 * exact.norm());
        let near = w.conj() + c(3e-6, -2e-6);
        assert!((db_kernel(&data, w, near) - data.kernel_generic(w, near)).norm() < 1e-9 * exact.norm());
    }
}
