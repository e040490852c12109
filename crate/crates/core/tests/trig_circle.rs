use std::f64::consts::PI;

mod common;

use bsv_core::trig_circle::{build_trig_extremal, eval_trig_f, trig_gram_defect, TrigExtremal};
use common::{c, trig_brute_force};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn grid() -> Vec<(usize, Complex64, Complex64)> {
    let mut out = Vec::new();
    for n in [1, 2, 4] {
        for a in [c(2.0, 0.0), c(0.0, 0.5), c(3.0, 1.0)] {
            for b in [c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0)] {
                out.push((n, a, b));
            }
        }
    }
    out
}

fn circle_samples(e: &TrigExtremal, count: usize) -> Vec<Complex64> {
    (0..count)
        .map(|k| eval_trig_f(e, Complex64::from_polar(1.0, 2.0 * PI * k as f64 / count as f64)).unwrap())
        .collect()
}

#[test]
fn four_ninths() {
    let e = build_trig_extremal(1, c(2.0, 0.0), c(1.0, 0.0)).unwrap();
    assert!((e.mean - 4.0 / 9.0).abs() <= 1e-12);
    assert!((e.constant_coeff() - e.mean).abs() <= 1e-12);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let oracle = trig_brute_force(1, c(2.0, 0.0), c(1.0, 0.0), &mut rng);
    assert!(oracle >= e.mean - 1e-6);
    assert!(oracle <= e.mean + 1e-6, "oracle {oracle}");
}

#[test]
fn brute_force_never_beats_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (n, a, b) in grid().into_iter().filter(|g| g.0 <= 2) {
        let e = build_trig_extremal(n, a, b).unwrap();
        let oracle = trig_brute_force(n, a, b, &mut rng);
        assert!(oracle >= e.mean - 1e-6, "{n} {a} {b}: {oracle} < {}", e.mean);
        assert!(oracle <= e.mean * (1.0 + 1e-4) + 1e-8, "{n} {a} {b}: oracle {oracle} vs {}", e.mean);
    }
}

#[test]
fn interpolates_on_grid() {
    for (n, a, b) in grid() {
        let e = build_trig_extremal(n, a, b).unwrap();
        let v = eval_trig_f(&e, a).unwrap();
        assert!((v - b).norm() <= 1e-10, "{n} {a} {b}: {v}");
    }
}

#[test]
fn mean_is_constant_coefficient_and_sample_average() {
    for (n, a, b) in grid() {
        let e = build_trig_extremal(n, a, b).unwrap();
        assert!((e.constant_coeff() - e.mean).abs() <= 1e-12 * e.mean.max(1.0));
        let laurent = e.laurent_coeffs();
        assert!((laurent[n].re - e.mean).abs() <= 1e-12 * e.mean.max(1.0));
        assert!(laurent[n].im.abs() <= 1e-15 * e.mean.max(1.0));
        for k in 0..n {
            assert!((laurent[k] - laurent[2 * n - k].conj()).norm() <= 1e-12 * e.mean.max(1.0));
        }
        let samples = circle_samples(&e, 4096);
        let avg: Complex64 = samples.iter().sum::<Complex64>() / 4096.0;
        assert!((avg.re - e.mean).abs() <= 1e-10 * e.mean.max(1.0));
        assert!(avg.im.abs() <= 1e-10 * e.mean.max(1.0));
    }
}

#[test]
fn nonnegative_and_real_on_circle() {
    for (n, a, b) in grid() {
        let e = build_trig_extremal(n, a, b).unwrap();
        let samples = circle_samples(&e, 4096);
        let scale = 1.0 + samples.iter().map(|v| v.norm()).fold(0.0, f64::max);
        for v in samples {
            assert!(v.re >= -1e-12 * scale);
            assert!(v.im.abs() <= 1e-12 * scale);
        }
    }
}

#[test]
fn laurent_series_reproduces_evaluator() {
    let e = build_trig_extremal(3, c(0.4, 1.2), c(2.0, -1.0)).unwrap();
    let laurent = e.laurent_coeffs();
    for &z in &[c(0.7, 0.2), c(-1.5, 2.0), c(0.1, -0.9)] {
        let series: Complex64 = laurent.iter().enumerate().map(|(j, &f)| f * z.powi(j as i32 - 3)).sum();
        let direct = eval_trig_f(&e, z).unwrap();
        assert!((series - direct).norm() <= 1e-12 * direct.norm().max(1.0));
    }
}

#[test]
fn independence_degrades_towards_circle() {
    for n in [1, 2, 4] {
        let defects: Vec<f64> =
            [1.1, 1.01, 1.001].iter().map(|&r| trig_gram_defect(n, Complex64::from_polar(r, 0.3))).collect();
        assert!(defects[0] > defects[1] && defects[1] > defects[2] && defects[2] > 0.0, "{defects:?}");
        let means: Vec<f64> = [1.1, 1.01, 1.001]
            .iter()
            .map(|&r| build_trig_extremal(n, Complex64::from_polar(r, 0.3), c(1.0, 0.0)).unwrap().mean)
            .collect();
        assert!(means.iter().all(|m| m.is_finite() && *m > 0.0));
    }
}

#[test]
fn inversion_symmetry() {
    for (n, a, b) in grid() {
        let direct = build_trig_extremal(n, a, b).unwrap().mean;
        let inverted = build_trig_extremal(n, a.conj().inv(), b.conj()).unwrap().mean;
        assert!((direct - inverted).abs() <= 1e-12 * direct.max(1.0), "{n} {a} {b}");
    }
}

#[test]
fn closed_form_mean() {
    for (n, a, b) in grid() {
        let e = build_trig_extremal(n, a, b).unwrap();
        let r2 = a.norm_sqr();
        let ka: f64 = (0..=n).map(|k| r2.powi(k as i32)).sum();
        let kb: f64 = (0..=n).map(|k| r2.powi(-(k as i32))).sum();
        let eta = (ka * kb).sqrt();
        let nu = (n + 1) as f64;
        let mean = 2.0 * (b.norm() * eta - nu * b.re) / (eta * eta - nu * nu);
        assert!((e.mean - mean).abs() <= 1e-12 * mean.max(1.0), "{n} {a} {b}");
    }
}
