//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use bsv_core::paley_wiener::PWExtremal;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The 27-point `(α, β, δ)` grid.
pub fn grid() -> Vec<(Complex64, Complex64, f64)> {
    let alphas = [c(0.0, 0.5), c(0.0, 1.0), c(1.0, 2.0)];
    let betas = [c(-1.0, 0.0), c(0.0, 1.0), c(2.0, -1.0)];
    let deltas = [0.1, 1.0, 10.0];
    let mut out = Vec::new();
    for &a in &alphas {
        for &b in &betas {
            for &d in &deltas {
                out.push((a, b, d));
            }
        }
    }
    out
}

/// Independent transform of F: the autocorrelation of
/// `Û(s) = Σ_j λ_j e^{−2πi c_j s}` on `[−δ/2, δ/2]`, with `c₁ = ᾱ`, `c₂ = α`,
/// integrated piece by piece in closed form.
pub fn convolution_oracle(e: &PWExtremal, tau: f64) -> Complex64 {
    let h = 0.5 * e.delta;
    let lo = (-h).max(tau - h);
    let hi = h.min(tau + h);
    if hi <= lo {
        return c(0.0, 0.0);
    }
    let cs = [e.alpha.conj(), e.alpha];
    let ls = [e.lambda1, e.lambda2];
    let mut acc = c(0.0, 0.0);
    for j in 0..2 {
        for k in 0..2 {
            let w = cs[j] - cs[k].conj();
            let integral = if w.norm() < 1e-14 {
                c(hi - lo, 0.0)
            } else {
                let m = c(0.0, -2.0 * PI) * w;
                ((m * hi).exp() - (m * lo).exp()) / m
            };
            acc += ls[j] * ls[k].conj() * (c(0.0, -2.0 * PI * tau) * cs[k].conj()).exp() * integral;
        }
    }
    acc
}

/// Minimize ‖h‖² over h ∈ ℂ² with ⟨h,u⟩·conj⟨h,v⟩ = β, where u, v realize
/// the Gram matrix [[η, ν], [ν̄, η]] explicitly as coordinate vectors.
pub fn gram_brute_force(eta: f64, nu: Complex64, beta: Complex64, theta: f64) -> f64 {
    let u1 = eta.sqrt();
    let v1 = nu.conj() / eta.sqrt();
    let v2 = (eta - nu.norm_sqr() / eta).sqrt();
    let norm_at = |log_s: f64| {
        let s = log_s.exp();
        let phase = Complex64::from_polar(1.0, theta);
        let b = phase * s;
        let a = beta / b.conj();
        let h1 = a / u1;
        let h2 = (b - h1 * v1.conj()) / v2;
        h1.norm_sqr() + h2.norm_sqr()
    };
    let (mut lo, mut hi) = (-20.0, 20.0);
    let mut best = (f64::INFINITY, 0.0);
    for k in 0..=4000 {
        let x = lo + (hi - lo) * k as f64 / 4000.0;
        let v = norm_at(x);
        if v < best.0 {
            best = (v, x);
        }
    }
    lo = best.1 - 0.01;
    hi = best.1 + 0.01;
    let g = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..200 {
        let x1 = hi - g * (hi - lo);
        let x2 = lo + g * (hi - lo);
        if norm_at(x1) < norm_at(x2) {
            hi = x2;
        } else {
            lo = x1;
        }
    }
    norm_at(0.5 * (lo + hi))
}

/// `Σ|c_n|²` over coefficient vectors satisfying `p(α)·conj(p(1/ᾱ)) = β`.
///
/// Feasible points are parametrized by `A = p(α) ≠ 0` and `c_2, …, c_N`;
/// then `p(1/ᾱ) = conj(β/A)` and `c_0, c_1` follow from two linear equations.
pub fn trig_feasible_objective(n: usize, alpha: Complex64, beta: Complex64, params: &[f64]) -> f64 {
    let a_val = c(params[0], params[1]);
    if a_val.norm() < 1e-12 {
        return f64::INFINITY;
    }
    let b_val = (beta / a_val).conj();
    let reflected = alpha.conj().inv();
    let higher: Vec<Complex64> = (2..=n).map(|k| c(params[2 * k - 2], params[2 * k - 1])).collect();
    let tail =
        |z: Complex64| -> Complex64 { higher.iter().enumerate().map(|(j, &ck)| ck * z.powu(j as u32 + 2)).sum() };
    let r1 = a_val - tail(alpha);
    let r2 = b_val - tail(reflected);
    let c1 = (r1 - r2) / (alpha - reflected);
    let c0 = r1 - c1 * alpha;
    c0.norm_sqr() + c1.norm_sqr() + higher.iter().map(|h| h.norm_sqr()).sum::<f64>()
}

/// Random restarts followed by compass search.
pub fn trig_brute_force(n: usize, alpha: Complex64, beta: Complex64, rng: &mut ChaCha8Rng) -> f64 {
    let dim = 2 * n;
    let mut best = f64::INFINITY;
    for _ in 0..60 {
        let mut x: Vec<f64> = (0..dim).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let mut fx = trig_feasible_objective(n, alpha, beta, &x);
        let mut step = 0.5;
        while step > 1e-10 {
            let mut improved = false;
            for i in 0..dim {
                for sign in [1.0, -1.0] {
                    let mut y = x.clone();
                    y[i] += sign * step;
                    let fy = trig_feasible_objective(n, alpha, beta, &y);
                    if fy < fx {
                        x = y;
                        fx = fy;
                        improved = true;
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        best = best.min(fx);
    }
    best
}
