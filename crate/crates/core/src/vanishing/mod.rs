//! Majorants and minorants of an interval indicator that vanish at
//! prescribed points of the upper half-plane, and the excess integrals they
//! certify.
//!
//! A majorant is built from a [`SelbergPair`](crate::selberg::SelbergPair)
//! either additively, `C + F(·; α, −C(α))`, or multiplicatively,
//! `C·Π(1 + F(w_n ·; w_n α_n, −1))`. Minorants use `c` in the same two ways.

mod majorant;
mod minorant;
mod rho;
mod threshold;

pub use majorant::{build_majorant, build_multipoint, MajorantMode, VanishingMajorant};
pub use minorant::{build_minorant, MinorantMode, VanishingMinorant};
pub use rho::{
    excess_numeric, loglog_slope, multipoint_integral_bound, multipoint_integral_bound_simplified, rho_scan,
    rho_upper_value, rho_upper_value_with, RhoRow, RhoScan, RhoValue, DEFAULT_RHO_TOLERANCE,
};
pub use threshold::{minorant_threshold_ok, threshold_gap, threshold_root};
