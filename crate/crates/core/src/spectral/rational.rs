//! Rational functions `p/q` given by polynomial coefficients.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use super::grid::{grid_point, BoundaryGrid};
use super::norms::horner;
use super::series::FourierSeries;
use crate::{Error, Result, C64};

#[derive(Clone, Debug, PartialEq)]
pub struct Rational {
    num: Vec<C64>,
    den: Vec<C64>,
}

impl Rational {
    /// `den(0)` must be nonzero so the quotient is analytic near the origin.
    pub fn new(num: Vec<C64>, den: Vec<C64>) -> Result<Self> {
        if den.first().is_none_or(|d| *d == C64::new(0.0, 0.0)) {
            return Err(Error::InvalidParameter("denominator must be nonzero at the origin"));
        }
        Ok(Self { num, den })
    }

    pub fn from_real(num: &[f64], den: &[f64]) -> Result<Self> {
        let lift = |v: &[f64]| v.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::new(lift(num), lift(den))
    }

    pub fn numerator(&self) -> &[C64] {
        &self.num
    }

    pub fn denominator(&self) -> &[C64] {
        &self.den
    }

    /// Taylor coefficients at the origin through `order`, by long division.
    pub fn taylor(&self, order: usize) -> FourierSeries {
        let d0 = self.den[0];
        let mut out: Vec<C64> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.get(n).copied().unwrap_or_default();
            for k in 1..self.den.len().min(n + 1) {
                acc -= self.den[k] * out[n - k];
            }
            out.push(acc / d0);
        }
        FourierSeries::from_taylor(order, &out)
    }

    /// Value at `z`; a vanishing denominator gives an infinite value.
    pub fn eval(&self, z: C64) -> C64 {
        let q = horner(&self.den, z);
        let p = horner(&self.num, z);
        let scale = self.den.iter().map(|c| c.norm()).sum::<f64>();
        if q.norm() <= 1e-15 * scale {
            C64::new(f64::INFINITY, 0.0)
        } else {
            p / q
        }
    }

    /// Exact boundary samples on `M` points (infinite at poles).
    pub fn sample(&self, samples: usize) -> Result<BoundaryGrid> {
        BoundaryGrid::new((0..samples).map(|k| self.eval(grid_point(k, samples))).collect())
    }

    /// Number of denominator zeros in `|z| < r`, by the argument principle.
    pub fn poles_inside(&self, r: f64, samples: usize) -> Result<usize> {
        let vals: Vec<C64> = (0..samples).map(|k| horner(&self.den, grid_point(k, samples) * r)).collect();
        if vals.iter().any(|v| v.norm() == 0.0) {
            return Err(Error::PoleOnDisk);
        }
        let mut turn = 0.0;
        for k in 0..samples {
            let step = vals[(k + 1) % samples] / vals[k];
            turn += step.arg();
        }
        Ok((turn / (2.0 * PI)).round().max(0.0) as usize)
    }

    /// Rejects poles in the closed disk: none strictly inside and none on
    /// the boundary grid.
    pub fn check_closed_disk(&self, samples: usize) -> Result<()> {
        if self.sample(samples)?.values().iter().any(|v| !v.is_finite()) {
            return Err(Error::PoleOnDisk);
        }
        let min_den =
            (0..samples).map(|k| horner(&self.den, grid_point(k, samples)).norm()).fold(f64::INFINITY, f64::min);
        let scale = self.den.iter().map(|c| c.norm()).sum::<f64>();
        if min_den < 1e-9 * scale || self.poles_inside(1.0, samples)? > 0 {
            return Err(Error::PoleOnDisk);
        }
        Ok(())
    }

    /// Rejects poles in the open disk; boundary poles are allowed.
    pub fn check_open_disk(&self, samples: usize) -> Result<()> {
        if self.poles_inside(1.0 - 1e-6, samples)? > 0 {
            return Err(Error::PoleOnDisk);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn long_division() {
        let h = Rational::from_real(&[1.0, 1.0], &[1.0, -1.0]).unwrap();
        let t = h.taylor(6);
        assert_eq!(t.get(0), C64::new(1.0, 0.0));
        for n in 1..=6 {
            assert!((t.get(n) - C64::new(2.0, 0.0)).norm() < 1e-15);
        }
        let half = Rational::from_real(&[1.0, 1.0], &[2.0]).unwrap().taylor(3);
        assert_eq!(half.get(1), C64::new(0.5, 0.0));
        assert_eq!(half.get(2), C64::new(0.0, 0.0));
    }

    #[test]
    fn pole_detection() {
        let h = Rational::from_real(&[1.0], &[1.0, -1.0]).unwrap();
        assert_eq!(h.check_closed_disk(64), Err(Error::PoleOnDisk));
        assert!(h.check_open_disk(64).is_ok());
        assert!(!h.sample(8).unwrap().values()[0].is_finite());
        let inside = Rational::from_real(&[1.0], &[1.0, -2.0]).unwrap();
        assert_eq!(inside.poles_inside(1.0, 256).unwrap(), 1);
        assert!(inside.check_open_disk(256).is_err());
        let fine = Rational::from_real(&[1.0], &[2.0, -1.0]).unwrap();
        assert!(fine.check_closed_disk(256).is_ok());
        assert!(Rational::from_real(&[1.0], &[0.0, 1.0]).is_err());
    }
}
