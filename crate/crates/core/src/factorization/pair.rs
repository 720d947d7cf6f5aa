//! Pythagorean pairs, factorizations of quotients and extremality margins.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::outer::{outer_from_split, split_log_modulus, work_samples, LogSplit};
use crate::spectral::fft::convolve;
use crate::spectral::{grid_point, sample_at_radius, BoundaryGrid, FourierSeries};
use crate::{Error, Result, C64};

/// Default clamp for the log-integral; anything below maps to `-∞`.
pub const MARGIN_FLOOR: f64 = -1e6;
/// Margins below this are treated as extreme.
pub const EXTREME_THRESHOLD: f64 = -50.0;

/// `1 - |b|²` loses all relative accuracy once it drops to a few ulps;
/// log-modulus samples below this floor are treated as zeros.
fn cancellation_floor() -> f64 {
    0.5 * (64.0 * f64::EPSILON).ln()
}

/// Analytic `b` and its outer mate `a`, `|a|² + |b|² = 1` on the circle.
#[derive(Clone, Debug, PartialEq)]
pub struct PythagoreanPair {
    pub b: FourierSeries,
    pub a: FourierSeries,
    pub tol: f64,
    /// Max-grid `| |a|² + |b|² - 1 |` measured at construction.
    pub identity_residual: f64,
}

impl PythagoreanPair {
    /// Pair from explicitly known `b` and `a`, checked on a grid.
    pub fn new(b: FourierSeries, a: FourierSeries, tol: f64) -> Result<Self> {
        let samples = work_samples(b.order().max(a.order()));
        let identity_residual = identity_residual(&b, &a, samples);
        if !(identity_residual <= tol) {
            return Err(Error::IllConditioned { estimate: identity_residual });
        }
        if !(a.get(0).re > 0.0) {
            return Err(Error::InvalidParameter("mate must be positive at the origin"));
        }
        Ok(Self { b, a, tol, identity_residual })
    }

    /// Constant pair `(b, a)` with `|b|² + a² = 1`.
    pub fn constant(order: usize, b: C64, tol: f64) -> Result<Self> {
        let a = (1.0 - b.norm_sqr()).max(0.0).sqrt();
        Self::new(FourierSeries::constant(order, b), FourierSeries::constant(order, C64::new(a, 0.0)), tol)
    }
}

fn identity_residual(b: &FourierSeries, a: &FourierSeries, samples: usize) -> f64 {
    let bv = sample_at_radius(&b.project_plus(), 1.0, samples);
    let av = sample_at_radius(&a.project_plus(), 1.0, samples);
    bv.iter().zip(&av).map(|(x, y)| (x.norm_sqr() + y.norm_sqr() - 1.0).abs()).fold(0.0, f64::max)
}

/// Finite Blaschke product `rotation · Π (z - w)/(1 - w̄z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlaschkeSpec {
    zeros: Vec<C64>,
    rotation: C64,
}

impl Default for BlaschkeSpec {
    fn default() -> Self {
        Self { zeros: Vec::new(), rotation: C64::new(1.0, 0.0) }
    }
}

impl BlaschkeSpec {
    pub fn new(zeros: Vec<C64>, rotation: C64) -> Result<Self> {
        if let Some(w) = zeros.iter().find(|w| !(w.norm() < 1.0)) {
            return Err(Error::OutsideDisk(w.norm()));
        }
        if (rotation.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter("rotation must be unimodular"));
        }
        Ok(Self { zeros, rotation })
    }

    pub fn zeros(&self) -> &[C64] {
        &self.zeros
    }

    pub fn rotation(&self) -> C64 {
        self.rotation
    }

    pub fn is_trivial(&self) -> bool {
        self.zeros.is_empty() && self.rotation == C64::new(1.0, 0.0)
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.zeros.iter().fold(self.rotation, |acc, &w| acc * (z - w) / (C64::new(1.0, 0.0) - w.conj() * z))
    }

    pub fn sample(&self, samples: usize) -> Vec<C64> {
        (0..samples).map(|k| self.eval(grid_point(k, samples))).collect()
    }

    /// Taylor coefficients through `order`.
    pub fn taylor(&self, order: usize) -> FourierSeries {
        let mut acc = alloc::vec![self.rotation];
        for &w in &self.zeros {
            let mut factor = Vec::with_capacity(order + 1);
            factor.push(-w);
            let scale = 1.0 - w.norm_sqr();
            let mut pow = C64::new(1.0, 0.0);
            for _ in 1..=order {
                factor.push(pow * scale);
                pow *= w.conj();
            }
            acc = convolve(&acc, &factor);
            acc.truncate(order + 1);
        }
        FourierSeries::from_taylor(order, &acc)
    }
}

fn mate_split(b: &FourierSeries, samples: usize) -> Result<(Option<LogSplit>, f64)> {
    let vals = sample_at_radius(&b.project_plus(), 1.0, samples);
    let peak = vals.iter().fold(0.0f64, |acc, v| acc.max(v.norm()));
    let g: Vec<f64> = vals
        .iter()
        .map(|v| {
            let s = v.norm();
            0.5 * ((1.0 - s) * (1.0 + s)).max(0.0).ln()
        })
        .collect();
    Ok((split_log_modulus(&g, cancellation_floor()), peak))
}

fn margin_of(split: &Option<LogSplit>) -> f64 {
    match split {
        Some(s) => {
            let m = 2.0 * s.mean();
            if m < MARGIN_FLOOR {
                f64::NEG_INFINITY
            } else {
                m
            }
        }
        None => f64::NEG_INFINITY,
    }
}

/// Grid quadrature of `log(1 - |b|²)`, with boundary zeros of `1 - |b|²`
/// integrated exactly. Returns `-∞` when the integral diverges at this
/// resolution or falls below [`MARGIN_FLOOR`].
pub fn non_extremality_margin(b: &FourierSeries) -> f64 {
    non_extremality_margin_with(b, work_samples(b.order()))
}

pub fn non_extremality_margin_with(b: &FourierSeries, samples: usize) -> f64 {
    match mate_split(b, samples) {
        Ok((split, _)) => margin_of(&split),
        Err(_) => f64::NEG_INFINITY,
    }
}

/// The outer mate `a` of `b`: `|a|² = 1 - |b|²` on the circle, `a(0) > 0`.
pub fn pythagorean_mate(b: &FourierSeries, tol: f64) -> Result<PythagoreanPair> {
    let order = b.order();
    let samples = work_samples(order);
    let (split, peak) = mate_split(b, samples)?;
    if peak > 1.0 + tol {
        return Err(Error::NotContractive(peak));
    }
    let margin = margin_of(&split);
    let split = match split {
        Some(s) if margin >= EXTREME_THRESHOLD => s,
        _ => return Err(Error::ExtremePoint { margin }),
    };
    let a = outer_from_split(&split, order)?;
    let b = b.project_plus();
    let identity_residual = identity_residual(&b, &a, samples);
    if !(identity_residual <= tol) {
        return Err(Error::IllConditioned { estimate: identity_residual });
    }
    Ok(PythagoreanPair { b, a, tol, identity_residual })
}

/// Result of factoring `h = c·I·b_o/a`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    /// `(c·I·b_o, a)`.
    pub pair: PythagoreanPair,
    pub outer_b: FourierSeries,
    pub c: C64,
    /// Max-grid `|c·I·b_o/a - h|` over points with `|a| ≥ 10⁻⁶`.
    pub recombination_residual: f64,
}

/// Below this `|a|` a grid point is too close to a pole of `h` for the
/// phase or the recombination check.
const A_CUTOFF: f64 = 1e-6;

/// The outer `a` with `|a|² = 1/(1 + |h|²)` and `a(0) > 0`, from exact
/// boundary samples of `h` (infinite at boundary poles). It depends only on
/// `|h|`, so no inner factor is needed.
pub fn quotient_mate_sampled(h: &BoundaryGrid, order: usize) -> Result<FourierSeries> {
    let g_a: Vec<f64> = h
        .values()
        .iter()
        .map(|v| if v.is_finite() { -0.5 * v.norm_sqr().ln_1p() } else { f64::NEG_INFINITY })
        .collect();
    let split = split_log_modulus(&g_a, f64::NEG_INFINITY).ok_or(Error::ExtremePoint { margin: f64::NEG_INFINITY })?;
    outer_from_split(&split, order)
}

/// Pythagorean factorization of `h` given by exact boundary samples, which
/// may be infinite at boundary poles. `inner` carries the inner factor of
/// `h`; the outer factors are recovered from `|h|`.
pub fn pythagorean_factorize_sampled(
    h: &BoundaryGrid,
    inner: &BlaschkeSpec,
    order: usize,
    tol: f64,
) -> Result<Factorization> {
    let samples = h.samples();
    let hv = h.values();
    let a = quotient_mate_sampled(h, order)?;
    let g_b: Vec<f64> =
        hv.iter().map(|v| if v.is_finite() { -0.5 * v.norm_sqr().recip().ln_1p() } else { 0.0 }).collect();
    let split_b =
        split_log_modulus(&g_b, f64::NEG_INFINITY).ok_or(Error::ExtremePoint { margin: f64::NEG_INFINITY })?;
    let outer_b = outer_from_split(&split_b, order)?;

    let av = sample_at_radius(&a, 1.0, samples);
    let bov = sample_at_radius(&outer_b, 1.0, samples);
    let iv = inner.sample(samples);

    let mut best = None;
    let mut best_mod = -1.0;
    for k in 0..samples {
        if hv[k].is_finite() && av[k].norm() > A_CUTOFF && bov[k].norm() > best_mod {
            best_mod = bov[k].norm();
            best = Some(k);
        }
    }
    let k = best.ok_or(Error::IllConditioned { estimate: f64::INFINITY })?;
    let ratio = hv[k] * av[k] / (iv[k] * bov[k]);
    let c = ratio / ratio.norm();

    let mut recombination_residual = 0.0f64;
    for k in 0..samples {
        if hv[k].is_finite() && av[k].norm() >= A_CUTOFF {
            let r = (c * iv[k] * bov[k] / av[k] - hv[k]).norm();
            recombination_residual = recombination_residual.max(r);
        }
    }
    if !(recombination_residual <= tol) {
        return Err(Error::InconsistentInner { residual: recombination_residual });
    }

    let b = if inner.is_trivial() { outer_b.clone() } else { inner.taylor(order).mul(&outer_b) }.scale(c);
    let identity_residual = identity_residual(&b, &a, samples);
    if !(identity_residual <= tol) {
        return Err(Error::IllConditioned { estimate: identity_residual });
    }
    Ok(Factorization { pair: PythagoreanPair { b, a, tol, identity_residual }, outer_b, c, recombination_residual })
}

/// Pythagorean factorization of an analytic series `h`, sampled on the
/// working grid of its order.
pub fn pythagorean_factorize(h: &FourierSeries, inner: &BlaschkeSpec, tol: f64) -> Result<Factorization> {
    let samples = work_samples(h.order());
    let grid = BoundaryGrid::new(sample_at_radius(&h.project_plus(), 1.0, samples))?;
    pythagorean_factorize_sampled(&grid, inner, h.order(), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::Rational;
    use core::f64::consts::LN_2;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn constant_mate() {
        let pair = pythagorean_mate(&FourierSeries::constant(16, c(0.6)), 1e-12).unwrap();
        assert!(pair.a.max_abs_diff(&FourierSeries::constant(16, c(0.8))) < 1e-14);
    }

    #[test]
    fn rational_mate() {
        let b = FourierSeries::from_real_taylor(2048, &[0.5, 0.5]);
        let pair = pythagorean_mate(&b, 1e-9).unwrap();
        let want = FourierSeries::from_real_taylor(2048, &[0.5, -0.5]);
        assert!(pair.a.max_abs_diff(&want) < 1e-8);
        assert!(pair.identity_residual < 1e-9);
    }

    #[test]
    fn inner_symbol_is_extreme() {
        let z = FourierSeries::monomial(64, 1, c(1.0));
        assert!(matches!(pythagorean_mate(&z, 1e-9), Err(Error::ExtremePoint { .. })));
        assert_eq!(non_extremality_margin(&z), f64::NEG_INFINITY);
    }

    #[test]
    fn margins() {
        let k = FourierSeries::constant(8, c(0.6));
        assert!((non_extremality_margin(&k) - 0.64f64.ln()).abs() < 1e-12);
        let b = FourierSeries::from_real_taylor(2048, &[0.5, 0.5]);
        assert!((non_extremality_margin(&b) + 2.0 * LN_2).abs() < 1e-9);
    }

    #[test]
    fn factorize_constant_and_inner() {
        let one = FourierSeries::constant(16, c(1.0));
        let f = pythagorean_factorize(&one, &BlaschkeSpec::default(), 1e-10).unwrap();
        let s = c(0.5f64.sqrt());
        assert!(f.pair.a.max_abs_diff(&FourierSeries::constant(16, s)) < 1e-14);
        assert!(f.pair.b.max_abs_diff(&FourierSeries::constant(16, s)) < 1e-14);
        assert!((f.c - c(1.0)).norm() < 1e-14);

        let z = FourierSeries::monomial(16, 1, c(1.0));
        let inner = BlaschkeSpec::new(alloc::vec![c(0.0)], c(1.0)).unwrap();
        let f = pythagorean_factorize(&z, &inner, 1e-10).unwrap();
        assert!(f.pair.b.max_abs_diff(&FourierSeries::monomial(16, 1, s)) < 1e-14);
        assert!(f.pair.a.max_abs_diff(&FourierSeries::constant(16, s)) < 1e-14);
        assert!((f.c - c(1.0)).norm() < 1e-14);
        assert!(matches!(
            pythagorean_factorize(&z, &BlaschkeSpec::default(), 1e-10),
            Err(Error::InconsistentInner { .. })
        ));
    }

    #[test]
    fn factorize_cayley_quotient() {
        let h = Rational::from_real(&[1.0, 1.0], &[1.0, -1.0]).unwrap();
        let f =
            pythagorean_factorize_sampled(&h.sample(1 << 14).unwrap(), &BlaschkeSpec::default(), 2048, 1e-6).unwrap();
        assert!(f.pair.b.max_abs_diff(&FourierSeries::from_real_taylor(2048, &[0.5, 0.5])) < 1e-6);
        assert!(f.pair.a.max_abs_diff(&FourierSeries::from_real_taylor(2048, &[0.5, -0.5])) < 1e-6);
        assert!((f.c - c(1.0)).norm() < 1e-6);
    }

    #[test]
    fn blaschke_taylor_matches_samples() {
        let spec = BlaschkeSpec::new(alloc::vec![C64::new(0.3, 0.2), c(-0.5)], C64::new(0.0, 1.0)).unwrap();
        let series = spec.taylor(200);
        let z = C64::new(0.1, -0.4);
        let direct = crate::spectral::evaluate(&series, z).unwrap();
        assert!((direct - spec.eval(z)).norm() < 1e-12);
        assert!(spec.sample(32).iter().all(|v| (v.norm() - 1.0).abs() < 1e-12));
        assert!(BlaschkeSpec::new(alloc::vec![c(1.0)], c(1.0)).is_err());
    }
}
