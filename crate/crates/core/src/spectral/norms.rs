//! Evaluation and the norms/metrics of the function classes.
//!
//! Radial limits are replaced by evaluation at the largest radius of a
//! [`DiskGrid`]; every value is returned together with that radial gap.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::fft::{fft_in_place, next_pow2};
use super::grid::{sample_at_radius, synthesize_raw, DiskGrid};
use super::series::FourierSeries;
use crate::{Error, Result, C64};

/// A grid-sampled norm or metric and the radial gap `1 - r_max` it was
/// computed at.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub radial_gap: f64,
}

impl Estimate {
    fn at(value: f64, grid: &DiskGrid) -> Self {
        Self { value, radial_gap: 1.0 - grid.max_radius() }
    }
}

/// `Σ f̂(n) zⁿ` over the analytic part, by Horner's rule.
pub fn evaluate(f: &FourierSeries, z: C64) -> Result<C64> {
    if z.norm() >= 1.0 {
        return Err(Error::OutsideDisk(z.norm()));
    }
    Ok(horner(f.taylor(), z))
}

pub(crate) fn horner(taylor: &[C64], z: C64) -> C64 {
    taylor.iter().rev().fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn mean_by(values: &[C64], f: impl Fn(f64) -> f64) -> f64 {
    values.iter().map(|v| f(v.norm())).sum::<f64>() / values.len() as f64
}

/// `sup_r (∫ |f(rζ)|^p)^{1/p}` over the grid radii.
pub fn hp_quasinorm(f: &FourierSeries, p: f64, grid: &DiskGrid) -> Result<Estimate> {
    if !(p > 0.0) {
        return Err(Error::InvalidParameter("p must be positive"));
    }
    let m = grid.samples().max(next_pow2(2 * f.order() + 1));
    let analytic = f.project_plus();
    let mut best = 0.0f64;
    for &r in grid.radii() {
        let vals = sample_at_radius(&analytic, r, m);
        let mean = mean_by(&vals, |a| a.powf(p));
        best = best.max(mean.powf(1.0 / p));
    }
    Ok(Estimate::at(best, grid))
}

/// `∫ (log(1 + |f - g|))^q` at the largest grid radius. `q = 1` is the
/// Smirnov metric.
pub fn privalov_distance(f: &FourierSeries, g: &FourierSeries, q: f64, grid: &DiskGrid) -> Result<Estimate> {
    if !(q >= 1.0) {
        return Err(Error::InvalidParameter("q must be at least 1"));
    }
    let diff = f.sub(g);
    let m = grid.samples().max(next_pow2(2 * diff.order() + 1));
    let vals = sample_at_radius(&diff, grid.max_radius(), m);
    let value = mean_by(&vals, |a| a.ln_1p().powf(q));
    Ok(Estimate::at(value, grid))
}

/// Garsia-type BMOA proxy `sup_w (P[|u|²](w) - |u(w)|²)^{1/2}` over the disk
/// grid points, with `|u|²` taken from the boundary values of the analytic
/// part of `u`.
pub fn garsia_bmoa_norm(u: &FourierSeries, grid: &DiskGrid) -> Estimate {
    let u = u.project_plus();
    let grid_m = grid.samples();
    // |u|² has band 2N; work on a grid fine enough to get its coefficients
    // exactly and read off the requested angles by striding.
    let m = grid_m.max(next_pow2(4 * u.order() + 1));
    let stride = m / grid_m.min(m);

    let boundary = synthesize_raw(&u, m);
    let mut sq: Vec<C64> = boundary.iter().map(|v| C64::new(v.norm_sqr(), 0.0)).collect();
    fft_in_place(&mut sq, false);
    let inv_m = 1.0 / m as f64;

    let mut best = 0.0f64;
    for &r in grid.radii() {
        let mut poisson: Vec<C64> = sq
            .iter()
            .enumerate()
            .map(|(bin, c)| {
                let n = if bin <= m / 2 { bin } else { m - bin };
                c * (inv_m * r.powi(n as i32))
            })
            .collect();
        fft_in_place(&mut poisson, true);
        let inner = sample_at_radius(&u, r, m);
        for k in (0..m).step_by(stride) {
            best = best.max(poisson[k].re - inner[k].norm_sqr());
        }
    }
    Estimate::at(best.max(0.0).sqrt(), grid)
}

/// `lim_r ∫ f(rζ) conj(m(rζ))`, i.e. `Σ_{n≥0} f̂(n) conj(m̂(n)) r^{2n}` at the
/// largest grid radius.
pub fn duality_pairing(f: &FourierSeries, m: &FourierSeries, grid: &DiskGrid) -> (C64, f64) {
    let r2 = grid.max_radius() * grid.max_radius();
    let mut weight = 1.0;
    let mut acc = C64::new(0.0, 0.0);
    for (a, b) in f.taylor().iter().zip(m.taylor()) {
        acc += a * b.conj() * weight;
        weight *= r2;
    }
    (acc, 1.0 - grid.max_radius())
}
