//! Detectors for the smoothness and size classes: analytic Lipschitz
//! classes (through derivative growth), Gevrey classes, Privalov classes
//! and the coefficient-growth condition.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::least_squares;
use crate::spectral::{privalov_distance, sample_at_radius, DiskGrid, FourierSeries};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ClassKind {
    Lipschitz { alpha: f64 },
    Gevrey { alpha: f64 },
    Privalov { q: f64 },
    CoefficientGrowth { q: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassVerdict {
    Member,
    NonMember,
    Marginal,
    FiniteSupport,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassReport {
    pub class: ClassKind,
    /// Fitted exponents; for Gevrey fits `[alpha, c]`.
    pub exponents: Vec<f64>,
    pub fit_residual: f64,
    pub margin: f64,
    pub verdict: ClassVerdict,
    /// Per-radius (or per-index) values the verdict was read from.
    pub ladder: Vec<f64>,
}

/// Derivative-growth values `(1-r)^{1-β}·max_θ |f^{(n+1)}(re^{iθ})|` per grid
/// radius, with `n < α ≤ n+1` and `β = α - n`; at `β = 1` the Zygmund form
/// `(1-r)·max |f^{(n+2)}|` is used.
pub fn lipschitz_ladder(f: &FourierSeries, alpha: f64, grid: &DiskGrid) -> Result<Vec<f64>> {
    if !(alpha > 0.0) {
        return Err(Error::InvalidParameter("alpha must be positive"));
    }
    let n = alpha.ceil() as usize - 1;
    let beta = alpha - n as f64;
    let zygmund = (beta - 1.0).abs() < 1e-12;
    let (order, power) = if zygmund { (n + 2, 1.0) } else { (n + 1, 1.0 - beta) };
    let mut g = f.project_plus();
    for _ in 0..order {
        g = g.derivative();
    }
    Ok(grid
        .radii()
        .iter()
        .map(|&r| {
            let peak = sample_at_radius(&g, r, grid.samples()).iter().fold(0.0f64, |a, v| a.max(v.norm()));
            (1.0 - r).powf(power) * peak
        })
        .collect())
}

/// Sup of [`lipschitz_ladder`] over the grid radii.
pub fn lipschitz_seminorm(f: &FourierSeries, alpha: f64, grid: &DiskGrid) -> Result<f64> {
    Ok(lipschitz_ladder(f, alpha, grid)?.into_iter().fold(0.0, f64::max))
}

/// Coefficients below this are treated as zero by the fits.
const TINY: f64 = 1e-280;
/// Leading coefficients excluded from tail fits.
const TRANSIENT: usize = 16;
/// Fewer nonzero coefficients than this is treated as a polynomial.
const MIN_SUPPORT: usize = 32;
const GEVREY_SLACK: f64 = 0.05;
const GEVREY_MAX_RESIDUAL: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GevreyFit {
    pub c: f64,
    pub alpha: f64,
    pub residual: f64,
    /// `None` when the coefficients are finitely supported.
    pub decaying: Option<bool>,
}

/// Fits `|f̂(n)| ≈ exp(-c·n^α)` by regressing `log(-log|f̂(n)|)` on `log n`
/// over the longest decaying run of the tail `n ≥ 16`.
pub fn gevrey_fit(f: &FourierSeries) -> GevreyFit {
    let taylor = f.taylor();
    let support = taylor.iter().filter(|c| c.norm() > TINY).count();
    if support < MIN_SUPPORT {
        return GevreyFit { c: 0.0, alpha: 0.0, residual: 0.0, decaying: None };
    }
    let usable = |n: usize| {
        let v = taylor[n].norm();
        v > TINY && v < 1.0
    };
    let (mut best, mut cur) = ((0, 0), None::<usize>);
    for n in TRANSIENT..=taylor.len() {
        let ok = n < taylor.len() && usable(n);
        match (ok, cur) {
            (true, None) => cur = Some(n),
            (false, Some(s)) => {
                if n - s > best.1 - best.0 {
                    best = (s, n);
                }
                cur = None;
            }
            _ => {}
        }
    }
    let (lo, hi) = best;
    if hi - lo < 8 {
        return GevreyFit { c: 0.0, alpha: 0.0, residual: f64::INFINITY, decaying: Some(false) };
    }
    let xs: Vec<f64> = (lo..hi).map(|n| (n as f64).ln()).collect();
    let ys: Vec<f64> = (lo..hi).map(|n| (-taylor[n].norm().ln()).ln()).collect();
    match least_squares(&[alloc::vec![1.0; xs.len()], xs], &ys) {
        Some((coef, residual)) => GevreyFit { c: coef[0].exp(), alpha: coef[1], residual, decaying: Some(true) },
        None => GevreyFit { c: 0.0, alpha: 0.0, residual: f64::INFINITY, decaying: Some(false) },
    }
}

/// Gevrey-class verdict for exponent `alpha0`.
pub fn gevrey_membership(f: &FourierSeries, alpha0: f64) -> ClassReport {
    let fit = gevrey_fit(f);
    let verdict = match fit.decaying {
        None => ClassVerdict::FiniteSupport,
        Some(false) => ClassVerdict::NonMember,
        Some(true) => {
            let cut = alpha0 - GEVREY_SLACK;
            if fit.residual >= GEVREY_MAX_RESIDUAL {
                ClassVerdict::NonMember
            } else if (fit.alpha - cut).abs() < 1e-9 {
                ClassVerdict::Marginal
            } else if fit.alpha > cut {
                ClassVerdict::Member
            } else {
                ClassVerdict::NonMember
            }
        }
    };
    let alpha = if fit.decaying == Some(false) { 0.0 } else { fit.alpha };
    ClassReport {
        class: ClassKind::Gevrey { alpha: alpha0 },
        exponents: alloc::vec![alpha, fit.c],
        fit_residual: fit.residual,
        margin: alpha - alpha0,
        verdict,
        ladder: Vec::new(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrivalovConfig {
    pub stable_rtol: f64,
    pub divergence_factor: f64,
}

impl Default for PrivalovConfig {
    fn default() -> Self {
        Self { stable_rtol: 1e-2, divergence_factor: 10.0 }
    }
}

/// Radial ladder of `∫ (log(1 + |f(rζ)|))^q`; stabilization means
/// membership, growth beyond the divergence factor means non-membership.
pub fn privalov_membership(f: &FourierSeries, q: f64, grid: &DiskGrid, config: &PrivalovConfig) -> Result<ClassReport> {
    let zero = FourierSeries::zero(0);
    let mut ladder = Vec::with_capacity(grid.radii().len());
    for &r in grid.radii() {
        let at = DiskGrid::new(alloc::vec![r], grid.samples())?;
        ladder.push(privalov_distance(f, &zero, q, &at)?.value);
    }
    let n = ladder.len();
    let last = ladder[n - 1];
    let prev = if n > 1 { ladder[n - 2] } else { last };
    let first = ladder.iter().copied().find(|v| *v > 0.0).unwrap_or(0.0);
    let change = if last == 0.0 { 0.0 } else { (last - prev).abs() / last };
    let verdict = if !last.is_finite() || (first > 0.0 && last / first > config.divergence_factor) {
        ClassVerdict::NonMember
    } else if change < config.stable_rtol {
        ClassVerdict::Member
    } else {
        ClassVerdict::Marginal
    };
    Ok(ClassReport {
        class: ClassKind::Privalov { q },
        exponents: Vec::new(),
        fit_residual: change,
        margin: if first > 0.0 { last / first } else { 1.0 },
        verdict,
        ladder,
    })
}

/// Band around 1 reported as marginal by [`coefficient_growth_margin`].
pub const GROWTH_BAND: f64 = 0.05;

/// `max_{n ≥ 16} log|f̂(n)| / n^{1/(1+q)}`; `q = 1` is the Smirnov case.
/// Margins above `1 + GROWTH_BAND` certify violation of the necessary
/// condition `|f̂(n)| = exp(o(n^{1/(1+q)}))`.
pub fn coefficient_growth_margin(f: &FourierSeries, q: f64) -> ClassReport {
    let e = 1.0 / (1.0 + q);
    let ladder: Vec<f64> = f
        .taylor()
        .iter()
        .enumerate()
        .skip(TRANSIENT)
        .filter(|(_, c)| c.norm() > 0.0)
        .map(|(n, c)| c.norm().ln() / (n as f64).powf(e))
        .collect();
    let margin = ladder.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let verdict = if (margin - 1.0).abs() <= GROWTH_BAND {
        ClassVerdict::Marginal
    } else if margin > 1.0 {
        ClassVerdict::NonMember
    } else {
        ClassVerdict::Member
    };
    ClassReport {
        class: ClassKind::CoefficientGrowth { q },
        exponents: alloc::vec![e],
        fit_residual: 0.0,
        margin,
        verdict,
        ladder,
    }
}
