//! Largest singular values and Toeplitz commutation checks.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::matrix::{toeplitz_matrix, LinearOperator};
use crate::spectral::FourierSeries;
use crate::{Error, Result, C64};

/// Power-iteration estimate of the largest singular value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormEstimate {
    pub value: f64,
    pub iterations: usize,
    /// `false` when the iteration cap was hit before the estimate settled.
    pub converged: bool,
}

pub const NORM_MAX_ITER: usize = 20_000;
const NORM_RTOL: f64 = 1e-14;

fn l2(v: &[C64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest singular value by power iteration on `A*A`.
pub fn operator_norm<A: LinearOperator + ?Sized>(op: &A) -> Result<NormEstimate> {
    operator_norm_with(op, NORM_MAX_ITER)
}

pub fn operator_norm_with<A: LinearOperator + ?Sized>(op: &A, max_iter: usize) -> Result<NormEstimate> {
    let n = op.ncols();
    if n == 0 || op.nrows() == 0 {
        return Ok(NormEstimate { value: 0.0, iterations: 0, converged: true });
    }
    // Deterministic start with no special structure, so it is not orthogonal
    // to the leading singular vector of the banded matrices met here.
    let mut x: Vec<C64> = (0..n)
        .map(|k| {
            let t = k as f64;
            C64::new(1.0 + 0.5 * (1.37 * t).sin(), 0.25 * (2.71 * t + 0.3).cos())
        })
        .collect();
    let norm = l2(&x);
    x.iter_mut().for_each(|v| *v /= norm);

    let mut sigma = 0.0;
    for it in 1..=max_iter {
        let y = op.apply(&x)?;
        let next = l2(&y);
        if next == 0.0 {
            return Ok(NormEstimate { value: 0.0, iterations: it, converged: true });
        }
        let z = op.apply_adjoint(&y)?;
        let zn = l2(&z);
        if !zn.is_finite() {
            return Err(Error::Overflow(zn));
        }
        if it > 1 && (next - sigma).abs() <= NORM_RTOL * next {
            return Ok(NormEstimate { value: next, iterations: it, converged: true });
        }
        sigma = next;
        x = z.into_iter().map(|v| v / zn).collect();
    }
    Ok(NormEstimate { value: sigma, iterations: max_iter, converged: false })
}

/// Max-entry deviation among `T_{g₁g₂}‾`, `T_{g₁}‾T_{g₂}‾` and
/// `T_{g₂}‾T_{g₁}‾` on the leading window `dim - deg g₁ - deg g₂`, where
/// truncation is exact for polynomial symbols.
pub fn commutation_residual(g1: &FourierSeries, g2: &FourierSeries, dim: usize) -> Result<f64> {
    let (g1, g2) = (g1.project_plus(), g2.project_plus());
    let deg = |g: &FourierSeries| g.degree().unwrap_or(0).max(0) as usize;
    let degrees = deg(&g1) + deg(&g2);
    if degrees >= dim {
        return Err(Error::WindowEmpty { dim, degrees });
    }
    let window = dim - degrees;
    let order = g1.order().max(g2.order()).max(degrees);
    let product = g1.with_order(order).mul(&g2.with_order(order));
    let t12 = toeplitz_matrix(&product, dim);
    let t1 = toeplitz_matrix(&g1, dim);
    let t2 = toeplitz_matrix(&g2, dim);
    let ab = t1.matrix().matmul(t2.matrix())?;
    let ba = t2.matrix().matmul(t1.matrix())?;
    Ok(t12
        .matrix()
        .window_diff(&ab, window)
        .max(t12.matrix().window_diff(&ba, window))
        .max(ab.window_diff(&ba, window)))
}
