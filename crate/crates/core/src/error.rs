use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point {0} is not in the open upper half-plane")]
    NotUpperHalfPlane(Complex64),

    #[error("kernels are linearly dependent (relative Gram defect {defect:e})")]
    DependentKernels { defect: f64 },

    #[error("multiplicative minorant needs pi*delta*Im(alpha) >= {threshold:.6}, got {value:.6}")]
    ThresholdViolated { value: f64, threshold: f64 },

    #[error("{mode} mode takes {expected} point(s), got {got}")]
    ModeArity { mode: &'static str, expected: &'static str, got: usize },

    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: Complex64 },

    #[error("root is not bracketed: g({lo}) and g({hi}) have the same sign")]
    Bracket { lo: f64, hi: f64 },

    #[error("quadrature did not converge within {panels} panels (estimate {estimate:e}, error {error:e})")]
    NonConvergence { panels: usize, estimate: f64, error: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Short machine-readable identifier, stable across releases.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotUpperHalfPlane(_) => "NotUpperHalfPlane",
            Error::DependentKernels { .. } => "DependentKernels",
            Error::ThresholdViolated { .. } => "ThresholdViolated",
            Error::ModeArity { .. } => "ModeArity",
            Error::Pole { .. } => "Pole",
            Error::Bracket { .. } => "Bracket",
            Error::NonConvergence { .. } => "NonConvergence",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}
