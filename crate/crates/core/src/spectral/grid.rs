use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use super::fft::fft_in_place;
use super::series::FourierSeries;
use crate::{Error, Result, C64};

/// Working resolution: truncation order `N` and boundary sample count `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub order: usize,
    pub samples: usize,
}

impl Default for Resolution {
    fn default() -> Self {
        Self { order: 2048, samples: 1 << 14 }
    }
}

impl Resolution {
    pub fn new(order: usize, samples: usize) -> Result<Self> {
        let res = Self { order, samples };
        res.validate()?;
        Ok(res)
    }

    pub fn validate(&self) -> Result<()> {
        check_samples(self.samples, self.order)
    }
}

fn check_samples(samples: usize, order: usize) -> Result<()> {
    if !samples.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(samples));
    }
    if samples < 2 * order + 1 {
        return Err(Error::GridTooSmall { samples, order });
    }
    Ok(())
}

/// Samples at the equispaced points `e^{2πik/M}`, `k = 0..M`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryGrid {
    values: Vec<C64>,
}

impl BoundaryGrid {
    pub fn new(values: Vec<C64>) -> Result<Self> {
        if !values.len().is_power_of_two() {
            return Err(Error::NotPowerOfTwo(values.len()));
        }
        Ok(Self { values })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Samples `f(ζ_k)` of a closed-form boundary function.
    pub fn from_fn(samples: usize, mut f: impl FnMut(C64) -> C64) -> Result<Self> {
        if !samples.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(samples));
        }
        Ok(Self { values: (0..samples).map(|k| f(grid_point(k, samples))).collect() })
    }

    pub fn samples(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<C64> {
        self.values
    }

    pub fn point(&self, k: usize) -> C64 {
        grid_point(k, self.values.len())
    }

    pub fn map(&self, mut f: impl FnMut(C64) -> C64) -> Self {
        Self { values: self.values.iter().map(|&v| f(v)).collect() }
    }

    /// Largest modulus over the grid.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

/// `e^{2πik/M}`.
pub fn grid_point(k: usize, samples: usize) -> C64 {
    let ang = 2.0 * PI * k as f64 / samples as f64;
    C64::new(ang.cos(), ang.sin())
}

/// Radial ladder inside the disk with a common angular resolution.
#[derive(Clone, Debug, PartialEq)]
pub struct DiskGrid {
    radii: Vec<f64>,
    samples: usize,
}

impl DiskGrid {
    /// Radii are sorted; each must lie in `[0, 1)`.
    pub fn new(mut radii: Vec<f64>, samples: usize) -> Result<Self> {
        if radii.is_empty() {
            return Err(Error::EmptyRadii);
        }
        if !samples.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(samples));
        }
        for &r in &radii {
            if !(0.0..1.0).contains(&r) {
                return Err(Error::InvalidRadius(r));
            }
        }
        radii.sort_by(|a, b| a.partial_cmp(b).unwrap());
        radii.dedup();
        Ok(Self { radii, samples })
    }

    /// Dyadic ladder `0, 1/2, 3/4, ..., 1 - 2^{-depth}`.
    pub fn dyadic(depth: u32, samples: usize) -> Result<Self> {
        let radii = (0..=depth).map(|j| 1.0 - 0.5f64.powi(j as i32)).collect();
        Self::new(radii, samples)
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    pub fn max_radius(&self) -> f64 {
        *self.radii.last().unwrap()
    }

    /// Ladder `{0} ∪ {1 - 2^{-j} : 2^j ≤ dim}` at `next_pow2(8·dim)` angles,
    /// matched to a coefficient truncation of size `dim`.
    pub fn for_truncation(dim: usize) -> Self {
        let dim = dim.max(2);
        let depth = usize::BITS - 1 - dim.leading_zeros();
        let mut radii = vec![0.0];
        radii.extend((1..=depth).map(|j| 1.0 - 0.5f64.powi(j as i32)));
        Self { radii, samples: super::fft::next_pow2(8 * dim) }
    }

    pub fn with_samples(&self, samples: usize) -> Result<Self> {
        Self::new(self.radii.clone(), samples)
    }
}

impl Default for DiskGrid {
    /// Dyadic ladder up to `1 - 2^{-14}` on `2^{14}` angles.
    fn default() -> Self {
        Self::dyadic(14, 1 << 14).unwrap()
    }
}

/// Discrete Fourier coefficients of boundary samples, orders `-N..=N`.
pub fn analyze(grid: &BoundaryGrid, order: usize) -> Result<FourierSeries> {
    let m = grid.samples();
    check_samples(m, order)?;
    let mut buf = grid.values().to_vec();
    fft_in_place(&mut buf, false);
    let scale = 1.0 / m as f64;
    Ok(FourierSeries::from_fn(order, |n| {
        let bin = if n >= 0 { n as usize } else { (m as i64 + n) as usize };
        buf[bin] * scale
    }))
}

/// Boundary samples of a series on `M` points; inverse of [`analyze`].
pub fn synthesize(f: &FourierSeries, samples: usize) -> Result<BoundaryGrid> {
    check_samples(samples, f.order())?;
    Ok(BoundaryGrid { values: synthesize_raw(f, samples) })
}

/// Values on `M` points without the band-limit check; coefficients are
/// folded modulo `M` so the values are exact point evaluations.
pub(crate) fn synthesize_raw(f: &FourierSeries, samples: usize) -> Vec<C64> {
    let mut buf = vec![C64::new(0.0, 0.0); samples];
    let n0 = f.order() as i64;
    for (i, &c) in f.coeffs().iter().enumerate() {
        let n = i as i64 - n0;
        buf[n.rem_euclid(samples as i64) as usize] += c;
    }
    fft_in_place(&mut buf, true);
    buf
}

/// Values of the harmonic extension `Σ f̂(n) r^{|n|} ζⁿ` on `M` points.
pub(crate) fn sample_at_radius(f: &FourierSeries, r: f64, samples: usize) -> Vec<C64> {
    if r == 1.0 {
        synthesize_raw(f, samples)
    } else {
        synthesize_raw(&f.dilate(r), samples)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_examples() {
        let consts = BoundaryGrid::from_fn(16, |_| C64::new(3.0, 0.0)).unwrap();
        let f = analyze(&consts, 4).unwrap();
        assert!(f.max_abs_diff(&FourierSeries::constant(4, C64::new(3.0, 0.0))) < 1e-15);

        let mode = BoundaryGrid::from_fn(16, |z| z).unwrap();
        let f = analyze(&mode, 4).unwrap();
        assert!(f.max_abs_diff(&FourierSeries::monomial(4, 1, C64::new(1.0, 0.0))) < 1e-15);

        let cos2 = BoundaryGrid::from_fn(16, |z| C64::new(2.0 * z.re, 0.0)).unwrap();
        let f = analyze(&cos2, 4).unwrap();
        let want = FourierSeries::from_pairs(4, &[(-1, C64::new(1.0, 0.0)), (1, C64::new(1.0, 0.0))]);
        assert!(f.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn synthesize_fourth_roots() {
        let f = FourierSeries::monomial(1, 1, C64::new(1.0, 0.0));
        let g = synthesize(&f, 4).unwrap();
        let want = [C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.0, -1.0)];
        for (a, b) in g.values().iter().zip(want) {
            assert!((a - b).norm() < 1e-15);
        }
        let ones = synthesize(&FourierSeries::constant(3, C64::new(1.0, 0.0)), 8).unwrap();
        assert!(ones.values().iter().all(|v| (v - C64::new(1.0, 0.0)).norm() < 1e-15));
    }

    #[test]
    fn grid_size_errors() {
        let g = BoundaryGrid::from_fn(8, |z| z).unwrap();
        assert_eq!(analyze(&g, 4), Err(Error::GridTooSmall { samples: 8, order: 4 }));
        assert!(matches!(BoundaryGrid::new(vec![C64::new(0.0, 0.0); 6]), Err(Error::NotPowerOfTwo(6))));
        assert!(matches!(DiskGrid::new(vec![], 8), Err(Error::EmptyRadii)));
        assert!(matches!(DiskGrid::new(vec![1.0], 8), Err(Error::InvalidRadius(_))));
    }
}
