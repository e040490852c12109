//! Paley–Wiener kernel, the extremal interpolant `F(z; α, β)` and its
//! transform.
//!
//! `δ` is the transform radius of `F`. The factor `U` and the kernel
//! `K(ω,z)` live one level down, with transforms in `[−δ/2, δ/2]`.

mod extremal;
mod kernel;
mod sampling;
mod spectrum;

pub use extremal::{build_extremal, kappa_real_beta, kappa_value, transform_closed_form, PWExtremal};
pub(crate) use kernel::{check_delta, check_upper};
pub use kernel::{kernel_eval, PWKernel};
pub use sampling::verify_bandlimited;
pub use spectrum::{SpectrumForm, SpectrumTerm};
