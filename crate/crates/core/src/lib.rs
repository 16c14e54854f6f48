//! Simulation and analysis of two-phase collaborative beamforming over
//! Rayleigh fading.
//!
//! K sources transmit simultaneously; N relay nodes scattered over a disk
//! forward the resulting mixture with conjugate weights so that one
//! source's packet adds coherently at its faraway destination. This crate
//! provides:
//!
//! * the random-geometry beampattern of such a relay disk
//!   ([`geometry`]);
//! * a seeded, parallel-deterministic Monte Carlo simulator of the
//!   per-symbol link ([`protocol`]);
//! * exact and closed-form symbol-error-probability expressions to
//!   cross-validate the simulator ([`sep`]);
//! * the special functions and adaptive quadrature behind them
//!   ([`math`]).

pub mod channel;
mod error;
pub mod geometry;
pub mod math;
pub mod protocol;
pub mod rng;
pub mod sep;

pub use channel::{normalize, NormalizedScales, SystemConfig};
pub use error::{Error, Result};
pub use protocol::BerEstimate;
pub use sep::{SepEstimate, SepMethod};
