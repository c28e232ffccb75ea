//! Numerical toolkit for fractional Schrödinger operators H = (−Δ)^α + V.
//!
//! The crate computes free and perturbed resolvent kernels, their low-energy
//! expansions and limiting-absorption scaling, Birman–Schwinger threshold
//! analysis, and dispersive-decay experiments for the propagator e^{itH}P_ac,
//! all at desk scale with oracle-backed quadrature.

pub mod cutoff;
pub mod dispersive;
pub mod error;
pub mod fit;
pub mod freeop;
pub mod grid;
pub mod hamiltonian;
pub mod hankel;
pub mod io;
pub mod norms;
pub mod oscillatory;
pub mod params;
pub mod perturbed;
pub mod potential;
pub mod quad;
pub mod resolvent;
pub mod special;
pub mod spline;
pub mod threshold;

pub use error::{Error, Result};
pub use params::FracParams;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
