//! Null-space design of Doppler- and delay-resilient Golay complementary
//! pulse trains.
//!
//! The crate is `no_std` (with `alloc`). It covers:
//!
//! - [`golay`]: biphase sequences, Golay pairs and exact integer correlations.
//! - [`design`]: Vandermonde design matrices over a Doppler or delay grid, their
//!   numerical null space and extraction of the transmit schedule `p` and the
//!   receiver weights `w`.
//! - [`ambiguity`]: discrete cross-ambiguity maps and sidelobe metrics.
//! - [`snropt`]: the `‖w‖₁²/‖w‖₂²` SNR factor, basis selection and heuristic
//!   coordinate descent over the null space.
//! - [`polarimetric`]: the four dual-polarization channels and the output matrix.
//! - [`baselines`]: binomial design and Prouhet–Thue–Morse schedules.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod ambiguity;
pub mod baselines;
pub mod design;
mod error;
pub mod golay;
mod linalg;
pub mod polarimetric;
pub mod snropt;

pub use error::{Error, Result};
pub use num_complex::Complex64;
