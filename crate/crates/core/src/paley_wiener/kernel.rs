use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{csinc, sinhc_minus_one};

/// Reproducing kernel `K(ω,z) = sin(πδ(z−ω̄)) / (π(z−ω̄))` of the space of
/// entire functions whose transforms live in `[−δ/2, δ/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PWKernel {
    pub delta: f64,
}

impl PWKernel {
    pub fn new(delta: f64) -> Result<Self> {
        check_delta(delta)?;
        Ok(Self { delta })
    }

    pub fn eval(&self, omega: Complex64, z: Complex64) -> Complex64 {
        kernel_eval(self.delta, omega, z)
    }

    /// `K(α,α) = sinh(2πyδ)/(2πy)` for `y = Im α`.
    pub fn diagonal(&self, y: f64) -> f64 {
        self.delta * (1.0 + sinhc_minus_one(2.0 * PI * y * self.delta))
    }

    /// `K(α,α) − δ`, free of cancellation for small `yδ`.
    pub fn diagonal_excess(&self, y: f64) -> f64 {
        self.delta * sinhc_minus_one(2.0 * PI * y * self.delta)
    }
}

pub fn kernel_eval(delta: f64, omega: Complex64, z: Complex64) -> Complex64 {
    csinc((z - omega.conj()) * (PI * delta)) * delta
}

pub(crate) fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("delta must be positive, got {delta}")))
    }
}

pub(crate) fn check_upper(alpha: Complex64) -> Result<()> {
    if alpha.im > 0.0 && alpha.re.is_finite() && alpha.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NotUpperHalfPlane(alpha))
    }
}
