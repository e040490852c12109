//! Numeric plumbing shared by every construction in the crate.

mod probe;
mod quadrature;
mod roots;
mod special;

pub use probe::spectrum_probe;
pub use quadrature::{
    integrate_interval, integrate_line, QuadValue, Quadrature, QuadratureResult, TailEnvelope, DEFAULT_PANEL_BUDGET,
};
pub use roots::find_root;
pub use special::{csinc, sinhc_minus_one, trigamma, CSINC_SWITCH_RADIUS, TRIGAMMA_ASYMPTOTIC_RADIUS};
pub(crate) use special::{digamma_log_gap, trigamma_remainder};
