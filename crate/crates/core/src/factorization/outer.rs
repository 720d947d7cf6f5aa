//! Outer functions from boundary log-modulus.
//!
//! The analytic completion `ĝ(0) + 2Σ ĝ(n)zⁿ` is exponentiated on the grid.
//! Boundary zeros make `g` logarithmically singular, and plain trapezoid
//! quadrature of `log|ζ - ζ₀|` is only accurate to `O(log M / M)`. Each
//! detected zero is therefore fitted as `α·log|ζ - ζ₀|`, removed from `g`,
//! and restored exactly as the factor `(1 - ζ̄₀z)^α`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use crate::linalg::least_squares;
use crate::spectral::fft::{convolve, fft_in_place, next_pow2};
use crate::spectral::{grid_point, sample_at_radius, BoundaryGrid, FourierSeries};
use crate::{Error, Result, C64};

/// Neighbours on each side used to fit a boundary zero.
const FIT_POINTS: usize = 16;
/// Longest run of unusable samples still treated as an isolated zero.
const MAX_RUN: usize = 64;
/// A finite sample this far below both neighbours is a sampled zero.
const DIP: f64 = 2.0;

/// Sample count used when a routine has to pick its own boundary grid.
pub(crate) fn work_samples(order: usize) -> usize {
    next_pow2(8 * order.max(1)).max(1024)
}

/// A log-modulus split into isolated boundary zeros and a smooth remainder.
#[derive(Clone, Debug)]
pub(crate) struct LogSplit {
    /// `(ζ₀, α)` for each removed `α·log|ζ - ζ₀|`.
    pub zeros: Vec<(C64, f64)>,
    /// Remainder with the zeros removed and unusable samples filled.
    pub smooth: Vec<f64>,
}

impl LogSplit {
    /// Mean of the log-modulus: the zero terms integrate to zero exactly.
    pub fn mean(&self) -> f64 {
        self.smooth.iter().sum::<f64>() / self.smooth.len() as f64
    }
}

/// Splits `g`. Samples that are non-finite or below `floor` are unusable.
/// Returns `None` when the unusable set is too large to be a finite set of
/// zeros, i.e. the log-integral diverges at this resolution.
pub(crate) fn split_log_modulus(g: &[f64], floor: f64) -> Option<LogSplit> {
    let m = g.len();
    let bad: Vec<bool> = g.iter().map(|v| !v.is_finite() || *v < floor).collect();
    let bad_count = bad.iter().filter(|&&b| b).count();
    if bad_count == m || bad_count > m / 8 {
        return None;
    }

    let mut runs = Vec::new();
    // Start scanning right after a good sample so circular runs stay whole.
    let start = (0..m).find(|&k| !bad[k])?;
    let mut k = 1;
    while k <= m {
        let idx = (start + k) % m;
        if bad[idx] {
            let mut len = 0;
            while bad[(idx + len) % m] {
                len += 1;
            }
            if len > MAX_RUN {
                return None;
            }
            runs.push((idx, len));
            k += len;
        } else {
            let prev = g[(idx + m - 1) % m];
            let next = g[(idx + 1) % m];
            if !bad[(idx + m - 1) % m] && !bad[(idx + 1) % m] && g[idx] < prev - DIP && g[idx] < next - DIP {
                runs.push((idx, 1));
            }
            k += 1;
        }
    }

    let mut smooth = g.to_vec();
    let mut unusable = bad.clone();
    for &(idx, len) in &runs {
        for j in 0..len {
            unusable[(idx + j) % m] = true;
        }
    }

    let mut zeros = Vec::new();
    let mut fills = Vec::new();
    for &(idx, len) in &runs {
        let centre = (idx + len / 2) % m;
        let half = len / 2 + 1;
        if let Some((alpha, poly)) = fit_zero(g, &unusable, centre, half) {
            zeros.push((grid_point(centre, m), alpha));
            fills.push((idx, len, centre, poly));
        } else {
            return None;
        }
    }

    for (k, v) in smooth.iter_mut().enumerate() {
        if unusable[k] {
            continue;
        }
        for &(z0, alpha) in &zeros {
            *v -= alpha * (grid_point(k, m) - z0).norm().ln();
        }
    }
    for (idx, len, centre, poly) in fills {
        for j in 0..len {
            let k = (idx + j) % m;
            let off = signed_offset(k, centre, m) as f64;
            let t = 2.0 * PI * off / m as f64;
            let mut val = poly.iter().rev().fold(0.0, |acc, c| acc * t + c);
            // Other zeros are smooth here.
            for &(z0, alpha) in &zeros {
                if z0 != grid_point(centre, m) {
                    val -= alpha * (grid_point(k, m) - z0).norm().ln();
                }
            }
            smooth[k] = val;
        }
    }
    Some(LogSplit { zeros, smooth })
}

fn signed_offset(k: usize, centre: usize, m: usize) -> i64 {
    let d = (k + m - centre) % m;
    if d > m / 2 {
        d as i64 - m as i64
    } else {
        d as i64
    }
}

/// Fits `g(c ± j) = α·log|2 sin(πj/M)| + Σ c_i tⁱ` (degree 4 in `t = 2πj/M`)
/// over usable neighbours; returns `α` and the polynomial coefficients.
fn fit_zero(g: &[f64], unusable: &[bool], centre: usize, first: usize) -> Option<(f64, [f64; 5])> {
    let m = g.len();
    let mut js = Vec::new();
    let mut even = Vec::new();
    let mut odd = Vec::new();
    let mut j = first;
    while js.len() < FIT_POINTS && j < first + 4 * FIT_POINTS && j < m / 4 {
        let plus = (centre + j) % m;
        let minus = (centre + m - j) % m;
        if !unusable[plus] && !unusable[minus] {
            js.push(j as f64);
            even.push(0.5 * (g[plus] + g[minus]));
            odd.push(0.5 * (g[plus] - g[minus]));
        }
        j += 1;
    }
    if js.len() < 8 {
        return None;
    }
    let scale = 2.0 * PI / m as f64;
    let log_col: Vec<f64> = js.iter().map(|&j| (2.0 * (PI * j / m as f64).sin()).ln()).collect();
    let ones = vec![1.0; js.len()];
    let t: Vec<f64> = js.iter().map(|&j| j * scale).collect();
    let pow = |e: i32| t.iter().map(|x| x.powi(e)).collect::<Vec<f64>>();
    let (ev, _) = least_squares(&[log_col, ones, pow(2), pow(4)], &even)?;
    let (od, _) = least_squares(&[pow(1), pow(3)], &odd)?;
    Some((ev[0], [ev[1], od[0], ev[2], od[1], ev[3]]))
}

/// Taylor coefficients of `(1 - ζ̄₀z)^α` through `order`.
pub(crate) fn zero_factor(z0: C64, alpha: f64, order: usize) -> Vec<C64> {
    let w = z0.conj();
    let mut out = Vec::with_capacity(order + 1);
    let mut c = C64::new(1.0, 0.0);
    out.push(c);
    for n in 1..=order {
        c = c * w * ((n as f64 - 1.0 - alpha) / n as f64);
        out.push(c);
    }
    out
}

/// Outer function `exp(ĝ(0) + 2Σ ĝ(n)zⁿ)` of a split log-modulus.
pub(crate) fn outer_from_split(split: &LogSplit, order: usize) -> Result<FourierSeries> {
    let m = split.smooth.len();
    let peak = split.smooth.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    if peak > 700.0 {
        return Err(Error::Overflow(peak));
    }
    let mut buf: Vec<C64> = split.smooth.iter().map(|&v| C64::new(v, 0.0)).collect();
    fft_in_place(&mut buf, false);
    let inv = 1.0 / m as f64;
    let mut spec = vec![C64::new(0.0, 0.0); m];
    spec[0] = C64::new(buf[0].re * inv, 0.0);
    for n in 1..m / 2 {
        spec[n] = buf[n] * (2.0 * inv);
    }
    spec[m / 2] = buf[m / 2] * inv;
    fft_in_place(&mut spec, true);
    let max_re = spec.iter().fold(f64::NEG_INFINITY, |a, v| a.max(v.re));
    if max_re > 700.0 {
        return Err(Error::Overflow(max_re));
    }
    let mut vals: Vec<C64> = spec.iter().map(|h| h.exp()).collect();
    fft_in_place(&mut vals, false);
    let keep = (order + 1).min(m / 2);
    let mut taylor: Vec<C64> = vals[..keep].iter().map(|v| v * inv).collect();
    taylor.resize(order + 1, C64::new(0.0, 0.0));
    for &(z0, alpha) in &split.zeros {
        let factor = zero_factor(z0, alpha, order);
        taylor = convolve(&taylor, &factor);
        taylor.truncate(order + 1);
    }
    // The constant term is exactly e^{ĝ(0)} > 0; aliasing and the
    // convolutions only add rounding noise to its imaginary part.
    taylor[0] = C64::new(taylor[0].re, 0.0);
    Ok(FourierSeries::from_taylor(order, &taylor))
}

fn real_samples(g: &BoundaryGrid) -> Result<Vec<f64>> {
    g.values()
        .iter()
        .map(|v| {
            if v.im.abs() > 1e-12 * (1.0 + v.re.abs()) && !v.im.is_nan() {
                Err(Error::NonRealSamples(v.im))
            } else {
                Ok(v.re)
            }
        })
        .collect()
}

/// Outer function with boundary modulus `e^g` and positive value at the
/// origin, truncated to `order`. `g` may be `-∞` at isolated grid points
/// (boundary zeros).
pub fn outer_from_log_modulus(g: &BoundaryGrid, order: usize) -> Result<FourierSeries> {
    let vals = real_samples(g)?;
    if let Some(&big) = vals.iter().find(|v| **v == f64::INFINITY || v.is_nan()) {
        return Err(Error::Overflow(big));
    }
    let split = split_log_modulus(&vals, f64::NEG_INFINITY).ok_or(Error::ExtremePoint { margin: f64::NEG_INFINITY })?;
    outer_from_split(&split, order)
}

/// Outer function with boundary modulus `|f|^θ` and positive value at the
/// origin, for outer `f` with `f(0) > 0`.
pub fn outer_power(f: &FourierSeries, theta: f64) -> Result<FourierSeries> {
    if !(theta > 0.0) {
        return Err(Error::InvalidParameter("theta must be positive"));
    }
    let order = f.order();
    let m = work_samples(order);
    let vals = sample_at_radius(&f.project_plus(), 1.0, m);
    let scale = vals.iter().fold(0.0f64, |a, v| a.max(v.norm()));
    if scale == 0.0 {
        return Err(Error::IllConditioned { estimate: f64::INFINITY });
    }
    let g: Vec<f64> = vals.iter().map(|v| theta * v.norm().ln()).collect();
    // Rounding leaves |f| ~ 1e-16·max|f| at sampled zeros; treat that as 0.
    let floor = theta * (scale.ln() + (64.0 * f64::EPSILON).ln());
    let split = split_log_modulus(&g, floor).ok_or(Error::IllConditioned { estimate: f64::INFINITY })?;
    outer_from_split(&split, order)
}
