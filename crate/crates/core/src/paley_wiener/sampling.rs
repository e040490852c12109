use std::f64::consts::{FRAC_1_PI, PI};

use crate::numerics::QuadValue;

/// Reconstruction pulse of the oversampled sampling series, scaled by the
/// sample spacing.
///
/// Its transform equals 1 on `[−σ, σ]`, falls off as a raised cosine and
/// vanishes beyond `1.5σ`. With sample spacing `1/(4σ)` every function with
/// transform in `[−σ, σ]` is reproduced exactly by the infinite series, the
/// pulse decays like `|t|⁻³`, and content between `1.5σ` and `2.5σ` is
/// removed rather than aliased back.
fn pulse(sigma: f64, t: f64) -> f64 {
    let taper_width = 0.5 * sigma;
    let center = sigma + 0.5 * taper_width;
    let x = 2.0 * center * t;
    let sinc = if x.abs() < 1e-8 { 1.0 } else { (PI * x).sin() / (PI * x) };
    let y = 2.0 * taper_width * t;
    let e = 1.0 - y.abs();
    // cos(πy/2)/(1 − y²); near |y| = 1 rewritten as sin(πe/2)/(e(2 − e)).
    let taper = if e.abs() < 0.1 {
        let h = 0.5 * PI * e;
        let sh = if h.abs() < 1e-8 { 1.0 } else { h.sin() / h };
        0.5 * PI * sh / (2.0 - e)
    } else {
        (0.5 * PI * y).cos() / (1.0 - y * y)
    };
    (2.0 * center / (4.0 * sigma)) * sinc * taper
}

/// Reconstruct `f` from samples at spacing `1/(4σ)` on `[−window/2, window/2]`
/// and return the largest residual over the central half of the window.
///
/// A small residual is evidence that `f̂` is supported in `[−σ, σ]`; energy
/// outside that band is attenuated or aliased and shows up in the residual.
pub fn verify_bandlimited<T, F>(f: F, sigma: f64, window: f64) -> f64
where
    T: QuadValue,
    F: Fn(f64) -> T,
{
    let h = 1.0 / (4.0 * sigma);
    let n = (0.5 * window / h).floor() as i64;
    let nodes: Vec<(f64, T)> = (-n..=n)
        .map(|k| {
            let t = k as f64 * h;
            (t, f(t))
        })
        .collect();
    let quarter = 0.25 * window;
    let checks = 2000usize;
    let mut worst: f64 = 0.0;
    for j in 0..checks {
        // Offset from the lattice by an irrational fraction of a step.
        let t = -quarter + (2.0 * quarter) * (j as f64 + FRAC_1_PI) / checks as f64;
        let approx = nodes.iter().fold(T::zero(), |acc, &(tk, fk)| acc + fk * pulse(sigma, t - tk));
        worst = worst.max((approx - f(t)).magnitude());
    }
    worst
}
