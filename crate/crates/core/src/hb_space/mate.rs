//! The mate equation `T_b̄ f = T_ā f₊` on coefficient truncations.
//!
//! For analytic `a` the truncation of `T_ā` is upper triangular with
//! diagonal `conj(a(0)) > 0`, so the least-squares problem has the exact
//! solution given by back substitution, and the truncated inverse is the
//! leading block of the infinite one.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::factorization::PythagoreanPair;
use crate::spectral::FourierSeries;
use crate::{Error, Result, C64};

/// Condition estimates above this flag a solve as unreliable.
pub const CONDITION_CAP: f64 = 1e14;

pub(crate) fn l2(v: &[C64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Leading `dim` Taylor coefficients, zero-padded.
pub(crate) fn head(f: &FourierSeries, dim: usize) -> Vec<C64> {
    (0..dim).map(|n| f.get(n as i64)).collect()
}

/// `T_ḡ x` for analytic `g`: `y_j = Σ_{k≥j} conj(ĝ(k - j)) x_k`.
pub(crate) fn upper_toeplitz_apply(g: &[C64], x: &[C64]) -> Vec<C64> {
    let dim = x.len();
    let band = g.len();
    (0..dim)
        .map(|j| {
            let hi = dim.min(j + band);
            (j..hi).map(|k| g[k - j].conj() * x[k]).sum()
        })
        .collect()
}

/// Solves `T_ḡ x = y` by back substitution.
pub(crate) fn upper_toeplitz_solve(g: &[C64], y: &[C64]) -> Result<Vec<C64>> {
    let g0 = g.first().copied().unwrap_or_default().conj();
    if g0.norm() == 0.0 {
        return Err(Error::IllConditioned { estimate: f64::INFINITY });
    }
    let dim = y.len();
    let band = g.len();
    let mut x = vec![C64::new(0.0, 0.0); dim];
    for j in (0..dim).rev() {
        let hi = dim.min(j + band);
        let s: C64 = (j + 1..hi).map(|k| g[k - j].conj() * x[k]).sum();
        x[j] = (y[j] - s) / g0;
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::Overflow(f64::INFINITY));
    }
    Ok(x)
}

/// Trims trailing coefficients that are zero so banded symbols stay cheap.
pub(crate) fn band(g: &FourierSeries, dim: usize) -> Vec<C64> {
    let mut v = head(g, dim);
    while v.len() > 1 && v.last() == Some(&C64::new(0.0, 0.0)) {
        v.pop();
    }
    v
}

/// `‖T_ā‖₁·‖T_ā⁻¹‖₁` on the truncation; the inverse of an upper triangular
/// Toeplitz matrix is the Toeplitz matrix of the reciprocal series.
pub(crate) fn condition_estimate(a: &[C64], dim: usize) -> f64 {
    let a0 = a[0];
    let mut inv: Vec<C64> = Vec::with_capacity(dim);
    inv.push(C64::new(1.0, 0.0) / a0);
    for n in 1..dim {
        let s: C64 = (1..=n.min(a.len() - 1)).map(|k| a[k] * inv[n - k]).sum();
        inv.push(-s / a0);
    }
    let n1 = a.iter().take(dim).map(|c| c.norm()).sum::<f64>();
    let n2 = inv.iter().map(|c| c.norm()).sum::<f64>();
    n1 * n2
}

#[derive(Clone, Debug, PartialEq)]
pub struct MateSolution {
    pub f: FourierSeries,
    pub f_plus: FourierSeries,
    /// `‖T_b̄ f - T_ā f₊‖₂` on the truncation.
    pub residual: f64,
    /// `√(‖f‖₂² + ‖f₊‖₂²)`.
    pub hb_norm: f64,
    pub dim: usize,
    pub condition: f64,
    /// Set when `condition` exceeds [`CONDITION_CAP`].
    pub ill_conditioned: bool,
}

fn truncated(v: &[C64]) -> FourierSeries {
    FourierSeries::from_taylor(v.len().saturating_sub(1), v)
}

/// Solves the mate equation at truncation `dim`. Coefficients of `f` at
/// indices `≥ dim` are ignored.
pub fn solve_mate(pair: &PythagoreanPair, f: &FourierSeries, dim: usize) -> Result<MateSolution> {
    if dim == 0 {
        return Err(Error::InvalidParameter("dim must be positive"));
    }
    let fv = head(f, dim);
    let b = band(&pair.b, dim);
    let a = band(&pair.a, dim);
    let rhs = upper_toeplitz_apply(&b, &fv);
    let fp = upper_toeplitz_solve(&a, &rhs)?;
    let lhs = upper_toeplitz_apply(&a, &fp);
    let residual = l2(&rhs.iter().zip(&lhs).map(|(x, y)| x - y).collect::<Vec<_>>());
    let hb_norm = (l2(&fv).powi(2) + l2(&fp).powi(2)).sqrt();
    let condition = condition_estimate(&a, dim);
    Ok(MateSolution {
        f: truncated(&fv),
        f_plus: truncated(&fp),
        residual,
        hb_norm,
        dim,
        condition,
        ill_conditioned: !(condition <= CONDITION_CAP),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    InSpace,
    OutOfSpace,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MembershipConfig {
    /// Relative change of the norm over the last two dims that counts as
    /// stabilized.
    pub stable_rtol: f64,
    /// Growth `last/first` of the norm that counts as divergence.
    pub divergence_factor: f64,
    /// Largest acceptable residual, relative to `‖T_b̄ f‖`-scale `1 + ‖f‖`.
    pub residual_tol: f64,
}

impl Default for MembershipConfig {
    fn default() -> Self {
        Self { stable_rtol: 1e-3, divergence_factor: 10.0, residual_tol: 1e-8 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MembershipReport {
    pub dims: Vec<usize>,
    pub hb_norms: Vec<f64>,
    pub residuals: Vec<f64>,
    pub verdict: Membership,
}

/// Mate solves along a dim ladder and a three-valued membership verdict.
pub fn membership_diagnostic(
    pair: &PythagoreanPair,
    f: &FourierSeries,
    dims: &[usize],
    config: &MembershipConfig,
) -> Result<MembershipReport> {
    if dims.len() < 2 || dims.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter("need at least two increasing dims"));
    }
    let mut hb_norms = Vec::with_capacity(dims.len());
    let mut residuals = Vec::with_capacity(dims.len());
    for &dim in dims {
        let sol = solve_mate(pair, f, dim)?;
        hb_norms.push(sol.hb_norm);
        residuals.push(sol.residual / (1.0 + l2(&head(f, dim))));
    }
    let n = hb_norms.len();
    let (first, prev, last) = (hb_norms[0], hb_norms[n - 2], hb_norms[n - 1]);
    let change = if last == 0.0 { 0.0 } else { (last - prev).abs() / last };
    let verdict = if !last.is_finite() || (first > 0.0 && last / first > config.divergence_factor) {
        Membership::OutOfSpace
    } else if change < config.stable_rtol && residuals[n - 1] <= config.residual_tol {
        Membership::InSpace
    } else {
        Membership::Inconclusive
    };
    Ok(MembershipReport { dims: dims.to_vec(), hb_norms, residuals, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    fn rational_pair() -> PythagoreanPair {
        PythagoreanPair::new(
            FourierSeries::from_real_taylor(8, &[0.5, 0.5]),
            FourierSeries::from_real_taylor(8, &[0.5, -0.5]),
            1e-12,
        )
        .unwrap()
    }

    #[test]
    fn zero_function() {
        let sol = solve_mate(&rational_pair(), &FourierSeries::zero(4), 16).unwrap();
        assert!(sol.f_plus.is_zero());
        assert_eq!(sol.hb_norm, 0.0);
    }

    #[test]
    fn closed_form_mates() {
        let pair = rational_pair();
        let one = solve_mate(&pair, &FourierSeries::constant(4, c(1.0)), 256).unwrap();
        assert!(one.f_plus.max_abs_diff(&FourierSeries::constant(255, c(1.0))) < 1e-14);
        assert!(one.residual < 1e-10);
        assert!((one.hb_norm - 2f64.sqrt()).abs() < 1e-12);
        let z = solve_mate(&pair, &FourierSeries::monomial(4, 1, c(1.0)), 256).unwrap();
        assert!(z.f_plus.max_abs_diff(&FourierSeries::from_real_taylor(255, &[2.0, 1.0])) < 1e-14);
        assert!(z.residual < 1e-10);
    }

    #[test]
    fn constant_pair_is_exact() {
        let pair = PythagoreanPair::constant(4, c(0.6), 1e-14).unwrap();
        let f = FourierSeries::from_taylor(4, &[c(1.0), C64::new(0.0, -2.0), c(0.5)]);
        let sol = solve_mate(&pair, &f, 8).unwrap();
        assert!(sol.residual < 1e-15);
        assert!(sol.f_plus.max_abs_diff(&f.scale(c(0.75)).with_order(7)) < 1e-15);
        assert!((sol.hb_norm - 1.25 * f.l2_norm()).abs() < 1e-14);
        let rep = membership_diagnostic(&pair, &f, &[8, 16, 32], &MembershipConfig::default()).unwrap();
        assert_eq!(rep.verdict, Membership::InSpace);
    }

    #[test]
    fn membership_of_one() {
        let rep = membership_diagnostic(
            &rational_pair(),
            &FourierSeries::constant(4, c(1.0)),
            &[64, 128, 256],
            &MembershipConfig::default(),
        )
        .unwrap();
        assert_eq!(rep.verdict, Membership::InSpace);
        assert!((rep.hb_norms[2] - 2f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn triangular_round_trip() {
        let g = [c(2.0), C64::new(0.5, 1.0), c(-0.25)];
        let y: Vec<C64> = (0..10).map(|k| C64::new(k as f64, 1.0)).collect();
        let x = upper_toeplitz_solve(&g, &y).unwrap();
        let back = upper_toeplitz_apply(&g, &x);
        assert!(back.iter().zip(&y).all(|(p, q)| (p - q).norm() < 1e-12));
    }
}
