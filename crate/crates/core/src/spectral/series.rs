use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::fft::convolve;
use crate::C64;

const ZERO: C64 = C64::new(0.0, 0.0);

/// Two-sided Fourier series `Σ_{|n| ≤ N} f̂(n) ζⁿ` of a boundary function.
///
/// Coefficients outside `[-N, N]` are zero. Products are truncated back to the
/// larger of the two operand orders.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierSeries {
    order: usize,
    // coeffs[n + order] = f̂(n)
    coeffs: Vec<C64>,
}

impl FourierSeries {
    pub fn zero(order: usize) -> Self {
        Self { order, coeffs: vec![ZERO; 2 * order + 1] }
    }

    /// Analytic series from Taylor coefficients `f̂(0), f̂(1), ...`; entries
    /// beyond `order` are dropped.
    pub fn from_taylor(order: usize, taylor: &[C64]) -> Self {
        let mut s = Self::zero(order);
        for (n, &c) in taylor.iter().take(order + 1).enumerate() {
            s.coeffs[order + n] = c;
        }
        s
    }

    /// Analytic series from real Taylor coefficients.
    pub fn from_real_taylor(order: usize, taylor: &[f64]) -> Self {
        let t: Vec<C64> = taylor.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::from_taylor(order, &t)
    }

    /// Series with the listed `(index, value)` entries; indices outside the
    /// order are ignored, repeated indices accumulate.
    pub fn from_pairs(order: usize, pairs: &[(i64, C64)]) -> Self {
        let mut s = Self::zero(order);
        for &(n, c) in pairs {
            if n.unsigned_abs() as usize <= order {
                s.coeffs[(n + order as i64) as usize] += c;
            }
        }
        s
    }

    pub fn constant(order: usize, c: C64) -> Self {
        Self::from_pairs(order, &[(0, c)])
    }

    pub fn monomial(order: usize, n: i64, c: C64) -> Self {
        Self::from_pairs(order, &[(n, c)])
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(i64) -> C64) -> Self {
        let mut s = Self::zero(order);
        let n0 = order as i64;
        for (i, c) in s.coeffs.iter_mut().enumerate() {
            *c = f(i as i64 - n0);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, n: i64) -> C64 {
        if n.unsigned_abs() as usize > self.order {
            ZERO
        } else {
            self.coeffs[(n + self.order as i64) as usize]
        }
    }

    /// Sets `f̂(n)`; returns `false` (and changes nothing) when `|n| > N`.
    pub fn set(&mut self, n: i64, c: C64) -> bool {
        if n.unsigned_abs() as usize > self.order {
            return false;
        }
        self.coeffs[(n + self.order as i64) as usize] = c;
        true
    }

    /// Coefficients for indices `-N..=N`.
    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Non-negative-index coefficients `f̂(0..=N)`.
    pub fn taylor(&self) -> &[C64] {
        &self.coeffs[self.order..]
    }

    /// Re-truncate (or zero-extend) to a new order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_fn(order, |n| self.get(n))
    }

    pub fn project_plus(&self) -> Self {
        let mut s = self.clone();
        for c in &mut s.coeffs[..self.order] {
            *c = ZERO;
        }
        s
    }

    pub fn project_minus(&self) -> Self {
        let mut s = self.clone();
        for c in &mut s.coeffs[self.order..] {
            *c = ZERO;
        }
        s
    }

    /// Series of the complex-conjugate boundary function: `n ↦ conj(f̂(-n))`.
    pub fn conj_series(&self) -> Self {
        let coeffs = self.coeffs.iter().rev().map(|c| c.conj()).collect();
        Self { order: self.order, coeffs }
    }

    pub fn is_analytic(&self) -> bool {
        self.coeffs[..self.order].iter().all(|c| *c == ZERO)
    }

    pub fn is_coanalytic(&self) -> bool {
        self.coeffs[self.order..].iter().all(|c| *c == ZERO)
    }

    /// Largest index with a non-zero coefficient, `None` for the zero series.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.iter().rposition(|c| *c != ZERO).map(|i| i as i64 - self.order as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == ZERO)
    }

    /// ℓ² norm of the coefficients, i.e. the L² norm under normalized measure.
    pub fn l2_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let order = self.order.max(other.order) as i64;
        (-order..=order).map(|n| (self.get(n) - other.get(n)).norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: C64) -> Self {
        Self { order: self.order, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.max(other.order);
        Self::from_fn(order, |n| self.get(n) + other.get(n))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.max(other.order);
        Self::from_fn(order, |n| self.get(n) - other.get(n))
    }

    /// Coefficient convolution truncated to the larger operand order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.max(other.order);
        let prod = convolve(&self.coeffs, &other.coeffs);
        // prod[i] has index i - self.order - other.order
        let shift = (self.order + other.order) as i64;
        Self::from_fn(order, |n| {
            let i = n + shift;
            if i < 0 || i as usize >= prod.len() {
                ZERO
            } else {
                prod[i as usize]
            }
        })
    }

    /// Complex derivative of the analytic part: `n f̂(n)` moves to `n - 1`.
    pub fn derivative(&self) -> Self {
        Self::from_fn(self.order, |n| if n < 0 { ZERO } else { self.get(n + 1) * (n + 1) as f64 })
    }

    /// Coefficients damped by `r^{|n|}`: the harmonic extension to radius `r`.
    pub fn dilate(&self, r: f64) -> Self {
        let mut s = self.clone();
        let n0 = self.order as i64;
        for (i, c) in s.coeffs.iter_mut().enumerate() {
            let n = (i as i64 - n0).unsigned_abs();
            *c *= r.powi(n as i32);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn projections_on_mixed_series() {
        let f = FourierSeries::from_pairs(4, &[(-1, c(1.0, 0.0)), (0, c(2.0, 0.0)), (3, c(0.0, 1.0))]);
        let plus = f.project_plus();
        assert_eq!(plus, FourierSeries::from_pairs(4, &[(0, c(2.0, 0.0)), (3, c(0.0, 1.0))]));
        assert_eq!(f.project_minus(), FourierSeries::from_pairs(4, &[(-1, c(1.0, 0.0))]));
        assert_eq!(plus.project_plus(), plus);
        assert!(plus.project_minus().is_zero());
        assert!(FourierSeries::monomial(6, -5, c(7.0, 0.0)).project_plus().is_zero());
    }

    #[test]
    fn conj_series_examples() {
        let f = FourierSeries::monomial(3, 1, c(0.0, 1.0));
        assert_eq!(f.conj_series(), FourierSeries::monomial(3, -1, c(0.0, -1.0)));
        let even = FourierSeries::from_pairs(3, &[(-1, c(1.0, 0.0)), (1, c(1.0, 0.0))]);
        assert_eq!(even.conj_series(), even);
    }

    #[test]
    fn product_truncates_to_order() {
        let z = FourierSeries::monomial(2, 1, c(1.0, 0.0));
        let z2 = z.mul(&z);
        assert_eq!(z2, FourierSeries::monomial(2, 2, c(1.0, 0.0)));
        assert!(z2.mul(&z).is_zero());
        let zbar = z.conj_series();
        assert_eq!(z.mul(&zbar), FourierSeries::constant(2, c(1.0, 0.0)));
    }

    #[test]
    fn out_of_range_access() {
        let mut f = FourierSeries::zero(2);
        assert!(!f.set(3, c(1.0, 0.0)));
        assert_eq!(f.get(-7), ZERO);
        assert_eq!(f.degree(), None);
        f.set(-2, c(1.0, 0.0));
        assert_eq!(f.degree(), Some(-2));
    }

    #[test]
    fn derivative_shifts_and_scales() {
        let f = FourierSeries::from_real_taylor(4, &[5.0, 1.0, 1.0, 1.0]);
        let d = f.derivative();
        assert_eq!(d, FourierSeries::from_real_taylor(4, &[1.0, 2.0, 3.0]));
    }
}
