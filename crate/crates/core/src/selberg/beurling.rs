use std::f64::consts::PI;

use num_complex::Complex64;

use crate::numerics::{csinc, trigamma, trigamma_remainder, TRIGAMMA_ASYMPTOTIC_RADIUS};

/// Beurling's entire majorant of `sgn`, of exponential type `2π`.
///
/// `B(z) = 1 + 2 (sin πz/π)² (1/z − ψ′(z+1))` for `Re z ≥ 0`, and
/// `B(z) = 2 (sin πz/(πz))² − B(−z)` otherwise. The right half-plane form has
/// no pole cancellation, so integers need no special handling.
pub fn beurling_b(z: Complex64) -> Complex64 {
    if z.re < 0.0 {
        let k = csinc(z * PI);
        return k * k * 2.0 - right_half(-z);
    }
    right_half(z)
}

fn right_half(z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if z.norm() >= TRIGAMMA_ASYMPTOTIC_RADIUS {
        // 1/z − ψ′(z+1) = 1/(2z²) − Σ B_{2k} z^{−2k−1}
        let s = (z * PI).sin() / PI;
        let gap = (z * z * 2.0).inv() - trigamma_remainder(z);
        return one + s * s * gap * 2.0;
    }
    let k = csinc(z * PI);
    let s = (z * PI).sin() / PI;
    // Re(z+1) ≥ 1, so trigamma has no pole here.
    let t = trigamma(z + one).expect("trigamma is regular for Re z > -1");
    one + (z * k * k - s * s * t) * 2.0
}

/// `B` on the real line.
pub fn beurling_b_real(x: f64) -> f64 {
    beurling_b(Complex64::new(x, 0.0)).re
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers() {
        assert_eq!(beurling_b_real(0.0), 1.0);
        for n in 1..40 {
            assert!((beurling_b_real(n as f64) - 1.0).abs() < 1e-14);
            assert!((beurling_b_real(-(n as f64)) + 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn negative_integers_against_series() {
        // Direct partial sums of the defining series at z = −n + ε.
        for n in 1..4 {
            let z = -(n as f64) + 1e-4;
            let s = (PI * z).sin() / PI;
            let mut sum = 2.0 / z;
            for m in 1..2_000_000i64 {
                let m = m as f64;
                sum += 1.0 / ((z - m) * (z - m)) - 1.0 / ((z + m) * (z + m));
            }
            let k = ((PI * z).sin() / (PI * z)).powi(2);
            let brute = s * s * sum + k;
            assert!((beurling_b_real(z) - brute).abs() < 1e-8, "n={n}");
        }
    }

    #[test]
    fn continuous_across_branches() {
        for &x in &[1e-9, 0.5, 3.0 - 1e-7, 9.999_999, 10.000_001] {
            for &sgn in &[1.0, -1.0] {
                let a = beurling_b(Complex64::new(sgn * x, 1e-9));
                let b = beurling_b(Complex64::new(sgn * x, -1e-9));
                assert!((a - b).norm() < 1e-7);
            }
        }
        let inside = beurling_b(Complex64::new(9.999_999_999, 0.3));
        let outside = beurling_b(Complex64::new(10.000_000_001, 0.3));
        assert!((inside - outside).norm() < 1e-7);
    }

    #[test]
    fn real_on_real_axis_and_symmetric() {
        for &x in &[0.3, 2.7, -4.1, 15.5] {
            let z = Complex64::new(x, 0.7);
            assert!((beurling_b(z.conj()) - beurling_b(z).conj()).norm() < 1e-12 * beurling_b(z).norm());
            assert!(beurling_b(Complex64::new(x, 0.0)).im.abs() < 1e-15);
        }
    }
}
