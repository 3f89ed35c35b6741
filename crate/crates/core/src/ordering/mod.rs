//! Dehornoy ordering, the floor function and fractional Dehn twist estimates.

mod fdtc;
mod handle;
mod rational;

pub use fdtc::{bh_fdtc, dehornoy_floor, fdtc, fdtc_with, FdtcEstimate, FdtcOptions};
pub use handle::{compare_dehornoy, handle_reduce, sigma_class, SigmaClass, DEFAULT_STEP_LIMIT};
pub use rational::{rationals_in, Rational};
