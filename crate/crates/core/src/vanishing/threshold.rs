use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::numerics::find_root;

/// `4 sinh u − sinh 2u − u`, whose positive root is the acceptance gate for
/// multiplicative minorants.
pub fn threshold_gap(u: f64) -> f64 {
    4.0 * u.sinh() - (2.0 * u).sinh() - u
}

/// Root `u* ≈ 1.0295` of [`threshold_gap`] on `[0.5, 2]`, computed once.
pub fn threshold_root() -> f64 {
    static ROOT: OnceLock<f64> = OnceLock::new();
    *ROOT.get_or_init(|| find_root(threshold_gap, 0.5, 2.0, 1e-15).expect("threshold_gap changes sign on [0.5, 2]"))
}

/// Whether `u = πδ Im(point)` reaches [`threshold_root`].
pub fn minorant_threshold_ok(point: Complex64, delta: f64) -> bool {
    PI * delta * point.im >= threshold_root()
}
