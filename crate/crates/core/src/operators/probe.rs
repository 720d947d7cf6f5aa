//! Hankel continuity probes: `‖H_m̄ h‖` in the Garsia norm over families of
//! unit-size test functions `h` concentrated near the boundary.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use super::matrix::{hankel_matrix, LinearOperator};
use crate::spectral::{garsia_bmoa_norm, DiskGrid, FourierSeries};
use crate::{Error, Result, C64};

/// Quasi-normed space the test functions are drawn from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ProbeSpace {
    Hp(f64),
    Privalov(f64),
    Smirnov,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeVerdict {
    Bounded,
    Divergent,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbeConfig {
    /// Number of atom radii, taken from the top of the dyadic ladder.
    pub radii: usize,
    /// Equispaced atom angles per radius.
    pub angles: usize,
    pub bounded_threshold: f64,
    pub divergent_threshold: f64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        Self { radii: 8, angles: 8, bounded_threshold: 1.5, divergent_threshold: 4.0 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContinuityProbeReport {
    pub dims: Vec<usize>,
    /// Running maximum of the per-dim probe norms.
    pub norms: Vec<f64>,
    /// `last / first`; 1 when every norm vanishes.
    pub growth_ratio: f64,
    pub verdict: ProbeVerdict,
}

/// Atom radii `1 - 2^{-j}` with `2^j ≤ dim/4`, the largest `count` of them.
fn atom_radii(dim: usize, count: usize) -> Vec<f64> {
    let mut radii: Vec<f64> = (1..63).take_while(|&j| (1usize << j) * 4 <= dim).map(|j| 1.0 - 0.5f64.powi(j)).collect();
    if radii.is_empty() {
        radii.push(0.5);
    }
    let skip = radii.len().saturating_sub(count);
    radii.split_off(skip)
}

/// Coefficients of `(1 - r²)^{1/p}(1 - rz)^{-2/p}` through `dim - 1`; the
/// untruncated function has unit `H^p` norm.
fn hp_atom(r: f64, p: f64, dim: usize) -> Vec<f64> {
    let alpha = 2.0 / p;
    let mut out = Vec::with_capacity(dim);
    let mut c = (1.0 - r * r).powf(1.0 / p);
    out.push(c);
    for n in 1..dim {
        c *= (n as f64 - 1.0 + alpha) / n as f64 * r;
        out.push(c);
    }
    out
}

/// `∫ (log(1 + e^{λP_r}))^q` with `P_r` the Poisson kernel at `r`.
fn exp_atom_metric(lambda: f64, r: f64, q: f64, samples: usize) -> f64 {
    let mut acc = 0.0;
    for k in 0..samples {
        let t = 2.0 * PI * k as f64 / samples as f64;
        let poisson = (1.0 - r * r) / (1.0 - 2.0 * r * t.cos() + r * r);
        let x = lambda * poisson;
        // log(1 + e^x) without overflow.
        let soft = if x > 30.0 { x + (-x).exp().ln_1p() } else { x.exp().ln_1p() };
        acc += soft.powf(q);
    }
    acc / samples as f64
}

/// Largest `λ` with `∫ (log(1 + |h|))^q ≤ 1` for `h = exp(λ(1+rz)/(1-rz))`.
fn calibrate_lambda(r: f64, q: f64) -> f64 {
    let samples = 1 << 14;
    let (mut lo, mut hi) = (0.0, 50.0);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if exp_atom_metric(mid, r, q, samples) > 1.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    lo
}

/// Taylor coefficients of `exp(λ(1+rz)/(1-rz))` through `dim - 1`, from
/// `n·h_n = Σ k·φ_k·h_{n-k}` with `φ = λ(1+rz)/(1-rz)`.
fn exp_atom(lambda: f64, r: f64, dim: usize) -> Vec<f64> {
    let mut kphi = vec![0.0; dim];
    let mut pow = r;
    for (k, v) in kphi.iter_mut().enumerate().skip(1) {
        *v = k as f64 * 2.0 * lambda * pow;
        pow *= r;
    }
    let mut h = Vec::with_capacity(dim);
    h.push(lambda.exp());
    for n in 1..dim {
        let s: f64 = (1..=n).map(|k| kphi[k] * h[n - k]).sum();
        h.push(s / n as f64);
    }
    h
}

/// Garsia norm of the analytic reflection of `H_m̄ h`: output index
/// `-(j + 1)` becomes coefficient `j + 1` after conjugation.
fn probe_value(hankel: &dyn LinearOperator, h: &[C64], grid: &DiskGrid) -> Result<f64> {
    let out = hankel.apply(h)?;
    let dim = out.len();
    let u = FourierSeries::from_fn(dim, |n| if n >= 1 { out[(n - 1) as usize].conj() } else { C64::new(0.0, 0.0) });
    Ok(garsia_bmoa_norm(&u, grid).value)
}

fn verdict(ratio: f64, config: &ProbeConfig) -> ProbeVerdict {
    if ratio < config.bounded_threshold {
        ProbeVerdict::Bounded
    } else if ratio > config.divergent_threshold {
        ProbeVerdict::Divergent
    } else {
        ProbeVerdict::Inconclusive
    }
}

/// Runs the probe along `dims`. Atoms have unit size in their space, so
/// the probe norm of each dim is the largest Garsia norm produced.
pub fn hankel_continuity_probe(
    m: &FourierSeries,
    space: ProbeSpace,
    dims: &[usize],
    config: &ProbeConfig,
) -> Result<ContinuityProbeReport> {
    if dims.is_empty() || dims.windows(2).any(|w| w[1] <= w[0]) || dims[0] == 0 {
        return Err(Error::InvalidParameter("dims must be positive and increasing"));
    }
    let exponent = match space {
        ProbeSpace::Hp(p) if p > 0.0 => None,
        ProbeSpace::Hp(_) => return Err(Error::InvalidParameter("p must be positive")),
        ProbeSpace::Privalov(q) if q >= 1.0 => Some(q),
        ProbeSpace::Privalov(_) => return Err(Error::InvalidParameter("q must be at least 1")),
        ProbeSpace::Smirnov => Some(1.0),
    };

    let mut norms = Vec::with_capacity(dims.len());
    let mut running = 0.0f64;
    for &dim in dims {
        let hankel = hankel_matrix(m, dim);
        let grid = DiskGrid::for_truncation(dim);
        let mut best = 0.0f64;
        for r in atom_radii(dim, config.radii) {
            let base = match (space, exponent) {
                (ProbeSpace::Hp(p), _) => hp_atom(r, p, dim),
                (_, Some(q)) => exp_atom(calibrate_lambda(r, q), r, dim),
                _ => unreachable!(),
            };
            for a in 0..config.angles.max(1) {
                let rot = C64::from_polar(1.0, -2.0 * PI * a as f64 / config.angles.max(1) as f64);
                let mut phase = C64::new(1.0, 0.0);
                let h: Vec<C64> = base
                    .iter()
                    .map(|&c| {
                        let v = phase * c;
                        phase *= rot;
                        v
                    })
                    .collect();
                best = best.max(probe_value(&hankel, &h, &grid)?);
            }
        }
        running = running.max(best);
        norms.push(running);
    }
    let first = norms[0];
    let last = *norms.last().expect("non-empty");
    let growth_ratio = if last == 0.0 {
        1.0
    } else if first == 0.0 {
        f64::INFINITY
    } else {
        last / first
    };
    Ok(ContinuityProbeReport { dims: dims.to_vec(), norms, growth_ratio, verdict: verdict(growth_ratio, config) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hp_atoms_have_unit_norm() {
        for (r, p) in [(0.5, 1.0), (0.75, 2.0), (0.9, 1.0)] {
            let coeffs = hp_atom(r, p, 4096);
            let series = FourierSeries::from_fn(4095, |n| {
                if n >= 0 {
                    C64::new(coeffs[n as usize], 0.0)
                } else {
                    C64::new(0.0, 0.0)
                }
            });
            let grid = DiskGrid::new(vec![0.999_999], 1 << 14).unwrap();
            let norm = crate::spectral::hp_quasinorm(&series, p, &grid).unwrap().value;
            assert!((norm - 1.0).abs() < 1e-5, "r={r} p={p}: {norm}");
        }
    }

    #[test]
    fn exp_atoms_match_closed_form() {
        let (lambda, r) = (0.3, 0.5);
        let h = exp_atom(lambda, r, 200);
        let z = 0.4;
        let series: f64 = h.iter().rev().fold(0.0, |acc, c| acc * z + c);
        let exact = (lambda * (1.0 + r * z) / (1.0 - r * z)).exp();
        assert!((series - exact).abs() < 1e-12);
        let lam = calibrate_lambda(0.75, 2.0);
        assert!((exp_atom_metric(lam, 0.75, 2.0, 1 << 14) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn constant_symbol_is_bounded() {
        let m = FourierSeries::constant(64, C64::new(2.0, 0.0));
        let rep = hankel_continuity_probe(&m, ProbeSpace::Hp(1.0), &[16, 32], &ProbeConfig::default()).unwrap();
        assert_eq!(rep.norms, [0.0, 0.0]);
        assert_eq!(rep.verdict, ProbeVerdict::Bounded);
    }

    #[test]
    fn atom_ladder() {
        assert_eq!(atom_radii(64, 8), [0.5, 0.75, 0.875, 0.9375]);
        assert_eq!(atom_radii(1024, 8).len(), 8);
        assert_eq!(*atom_radii(1024, 8).last().unwrap(), 1.0 - 1.0 / 256.0);
    }
}
