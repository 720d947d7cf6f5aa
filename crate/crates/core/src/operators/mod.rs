//! Finite Toeplitz and Hankel truncations, their norms and the Hankel
//! continuity probes.

mod matrix;
mod norm;
mod probe;

pub use matrix::{
    apply, hankel_matrix, toeplitz_matrix, Adjoint, DenseMatrix, HankelMatrix, LinearOperator, Product, ToeplitzMatrix,
};
pub use norm::{commutation_residual, operator_norm, operator_norm_with, NormEstimate, NORM_MAX_ITER};
pub use probe::{hankel_continuity_probe, ContinuityProbeReport, ProbeConfig, ProbeSpace, ProbeVerdict};
