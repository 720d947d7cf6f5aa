//! Boundary-function representations, Riesz projections and norms.

pub mod fft;
mod grid;
mod norms;
mod rational;
mod series;

pub(crate) use grid::sample_at_radius;
pub use grid::{analyze, grid_point, synthesize, BoundaryGrid, DiskGrid, Resolution};
pub use norms::{duality_pairing, evaluate, garsia_bmoa_norm, hp_quasinorm, privalov_distance, Estimate};
pub use rational::Rational;
pub use series::FourierSeries;
