#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod debranges;
pub mod error;
pub mod numerics;
pub mod paley_wiener;
pub mod rkhs;
pub mod selberg;
pub mod trig_circle;
pub mod vanishing;

pub use error::{Error, Result};
