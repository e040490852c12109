use std::f64::consts::PI;

use num_complex::Complex64;

/// Trapezoidal approximation of `∫ f(t) e^{−2πi t·frequency} dt` from samples
/// `samples[k] = f(origin + k·spacing)`.
///
/// The caller is responsible for the window covering the effective support;
/// no tail correction is applied.
pub fn spectrum_probe(samples: &[Complex64], origin: f64, spacing: f64, frequency: f64) -> Complex64 {
    let n = samples.len();
    if n == 0 {
        return Complex64::new(0.0, 0.0);
    }
    let step = Complex64::from_polar(1.0, -2.0 * PI * spacing * frequency);
    let mut phase = Complex64::from_polar(1.0, -2.0 * PI * origin * frequency);
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, &s) in samples.iter().enumerate() {
        // Re-anchor periodically so the running product does not drift.
        if k % 1024 == 0 {
            let t = origin + k as f64 * spacing;
            phase = Complex64::from_polar(1.0, -2.0 * PI * t * frequency);
        }
        let w = if k == 0 || k + 1 == n { 0.5 } else { 1.0 };
        acc += s * phase * w;
        phase *= step;
    }
    acc * spacing
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(h: f64) -> (Vec<Complex64>, f64) {
        let n = (4.0 / h).round() as usize + 1;
        let origin = -2.0;
        let s = (0..n)
            .map(|k| {
                let t = origin + k as f64 * h;
                Complex64::new((1.0 - t.abs()).max(0.0), 0.0)
            })
            .collect();
        (s, origin)
    }

    #[test]
    fn triangle_area() {
        let (s, o) = triangle(1e-3);
        assert!((spectrum_probe(&s, o, 1e-3, 0.0) - 1.0).norm() < 1e-9);
    }

    #[test]
    fn fejer_zero_at_integer_frequency() {
        let (s, o) = triangle(1e-3);
        assert!(spectrum_probe(&s, o, 1e-3, 1.0).norm() < 1e-6);
    }

    #[test]
    fn gaussian_transform() {
        let h = 0.01;
        let o = -10.0;
        let s: Vec<Complex64> = (0..2001)
            .map(|k| {
                let t = o + k as f64 * h;
                Complex64::new((-PI * t * t).exp(), 0.0)
            })
            .collect();
        let got = spectrum_probe(&s, o, h, 0.7);
        assert!((got - (-PI * 0.49f64).exp()).norm() < 1e-12);
    }
}
