//! Spectral numerics for non-extreme de Branges–Rovnyak spaces.
//!
//! Boundary functions on the unit circle are carried as finitely supported
//! two-sided Fourier series ([`FourierSeries`]); everything else in the crate
//! is built on top of that representation:
//!
//! * [`spectral`]: sampling grids, Riesz projections, evaluation and the
//!   norms/metrics of the Hardy, Privalov/Smirnov and BMOA scales.
//! * [`factorization`]: outer functions from boundary log-modulus,
//!   Pythagorean mates, Pythagorean factorizations of quotients and their
//!   stability under perturbation.
//! * [`operators`]: finite Toeplitz and Hankel truncations, operator norms
//!   and the Hankel continuity probes.
//! * [`hb_space`]: the mate equation, membership diagnostics and multiplier
//!   certification.
//! * [`classes`]: detectors for Lipschitz, Gevrey and Privalov classes.
//!
//! All integrals use arclength measure normalized to total mass one. The
//! crate is `no_std` and only needs an allocator.

#![no_std]
// `!(x > 0.0)` rejects NaN along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod classes;
pub mod error;
pub mod factorization;
pub mod hb_space;
mod linalg;
pub mod operators;
pub mod spectral;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
pub use spectral::{BoundaryGrid, DiskGrid, Estimate, FourierSeries, Rational, Resolution};
