//! Selberg's band-limited majorant and minorant of an interval indicator,
//! built from Beurling's function.

mod beurling;
mod pair;

pub use beurling::{beurling_b, beurling_b_real};
pub use pair::{build_selberg, lipschitz_zero_bound, zero_scan, SelbergPair, DEFAULT_ZERO_BOUND_CONSTANT};
