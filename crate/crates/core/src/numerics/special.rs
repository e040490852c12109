//! Elementary and special functions on complex arguments.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Below this modulus `csinc` switches from `sin(w)/w` to its Taylor series.
pub const CSINC_SWITCH_RADIUS: f64 = 1e-2;

/// Taylor coefficients of sin(w)/w in powers of w², i.e. (-1)^k / (2k+1)!.
const CSINC_SERIES: [f64; 8] = [
    1.0,
    -1.0 / 6.0,
    1.0 / 120.0,
    -1.0 / 5040.0,
    1.0 / 362_880.0,
    -1.0 / 39_916_800.0,
    1.0 / 6_227_020_800.0,
    -1.0 / 1_307_674_368_000.0,
];

/// `sin(w)/w` with the removable singularity at the origin filled in.
pub fn csinc(w: Complex64) -> Complex64 {
    if w.norm() < CSINC_SWITCH_RADIUS {
        let w2 = w * w;
        CSINC_SERIES.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * w2 + c)
    } else {
        w.sin() / w
    }
}

/// `sinh(u)/u - 1` for real `u`, accurate near zero where the direct
/// difference cancels.
pub fn sinhc_minus_one(u: f64) -> f64 {
    let u2 = u * u;
    if u.abs() < 0.5 {
        // u²/3! + u⁴/5! + ... ; 12 terms reach below 1e-17 relative at |u| = 0.5
        let mut term = u2 / 6.0;
        let mut sum: f64 = 0.0;
        let mut k = 1.0;
        while term.abs() > 1e-18 * sum.abs().max(f64::MIN_POSITIVE) {
            sum += term;
            k += 1.0;
            term *= u2 / ((2.0 * k) * (2.0 * k + 1.0));
        }
        sum
    } else {
        u.sinh() / u - 1.0
    }
}

/// Even Bernoulli numbers B_2 .. B_16.
const BERNOULLI_EVEN: [f64; 8] =
    [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0];

/// Modulus from which the asymptotic expansion of the trigamma function is used.
pub const TRIGAMMA_ASYMPTOTIC_RADIUS: f64 = 10.0;

/// `ψ(u+1) − ln u = ∫_u^∞ (1/s − ψ′(s+1)) ds` for real `u ≥ 10`, from the
/// asymptotic series `1/(2u) − Σ B_{2k}/(2k u^{2k})`.
pub(crate) fn digamma_log_gap(u: f64) -> f64 {
    let inv2 = 1.0 / (u * u);
    let mut pow = inv2;
    let mut sum = 0.5 / u;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        sum -= b * pow / (2.0 * (k + 1) as f64);
        pow *= inv2;
    }
    sum
}

/// Asymptotic remainder `ψ′(z) − 1/z − 1/(2z²) = Σ B_{2k} / z^{2k+1}`.
/// Only meaningful for |z| ≥ 10 away from the negative real axis.
pub(crate) fn trigamma_remainder(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut pow = inv * inv2;
    let mut sum = Complex64::new(0.0, 0.0);
    for b in BERNOULLI_EVEN {
        sum += pow * b;
        pow *= inv2;
    }
    sum
}

/// Trigamma function ψ′(z) = Σ_{k≥0} 1/(z+k)².
///
/// Shifts `z` upward with ψ′(z) = ψ′(z+1) + 1/z² until it is in the right
/// half-plane with |z| ≥ 10, then sums the asymptotic series.
pub fn trigamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::InvalidArgument(format!("non-finite trigamma argument {z}")));
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Err(Error::Pole { function: "trigamma", at: z });
    }
    let mut shifted = z;
    let mut head = Complex64::new(0.0, 0.0);
    while shifted.re < 0.0 || shifted.norm() < TRIGAMMA_ASYMPTOTIC_RADIUS {
        head += (shifted * shifted).inv();
        shifted += 1.0;
    }
    let inv = shifted.inv();
    Ok(head + inv + inv * inv * 0.5 + trigamma_remainder(shifted))
}
