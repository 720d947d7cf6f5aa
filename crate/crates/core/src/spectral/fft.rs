//! Iterative radix-2 FFT on power-of-two buffers.

use core::f64::consts::PI;

#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use crate::C64;

/// Unnormalized in-place transform.
///
/// Forward computes `X[n] = Σ x[k] e^{-2πi nk/M}`, inverse uses the opposite
/// sign. `buf.len()` must be a power of two.
pub fn fft_in_place(buf: &mut [C64], inverse: bool) {
    let n = buf.len();
    assert!(n.is_power_of_two(), "fft length {n} is not a power of two");
    if n <= 1 {
        return;
    }

    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if j > i {
            buf.swap(i, j);
        }
    }

    let sign = if inverse { 1.0 } else { -1.0 };
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let step = sign * 2.0 * PI / len as f64;
        // Twiddles are computed directly rather than by repeated
        // multiplication so the error stays at one rounding per factor.
        let twiddles: alloc::vec::Vec<C64> = (0..half)
            .map(|k| {
                let ang = step * k as f64;
                C64::new(ang.cos(), ang.sin())
            })
            .collect();
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let a = buf[start + k];
                let b = buf[start + k + half] * twiddles[k];
                buf[start + k] = a + b;
                buf[start + k + half] = a - b;
            }
        }
        len <<= 1;
    }
}

/// Smallest power of two `>= n`.
pub fn next_pow2(n: usize) -> usize {
    n.max(1).next_power_of_two()
}

/// Linear convolution of two coefficient slices.
pub fn convolve(a: &[C64], b: &[C64]) -> alloc::vec::Vec<C64> {
    use alloc::vec;
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let out_len = a.len() + b.len() - 1;
    if a.len().min(b.len()) <= 32 {
        let mut out = vec![C64::new(0.0, 0.0); out_len];
        for (i, &x) in a.iter().enumerate() {
            if x == C64::new(0.0, 0.0) {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        return out;
    }
    let size = next_pow2(out_len);
    let mut fa = vec![C64::new(0.0, 0.0); size];
    let mut fb = vec![C64::new(0.0, 0.0); size];
    fa[..a.len()].copy_from_slice(a);
    fb[..b.len()].copy_from_slice(b);
    fft_in_place(&mut fa, false);
    fft_in_place(&mut fb, false);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x *= *y;
    }
    fft_in_place(&mut fa, true);
    let scale = 1.0 / size as f64;
    fa.truncate(out_len);
    for x in fa.iter_mut() {
        *x *= scale;
    }
    fa
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn naive_dft(x: &[C64]) -> Vec<C64> {
        let n = x.len();
        (0..n)
            .map(|k| {
                x.iter().enumerate().fold(C64::new(0.0, 0.0), |acc, (j, &v)| {
                    let ang = -2.0 * PI * (j * k) as f64 / n as f64;
                    acc + v * C64::new(ang.cos(), ang.sin())
                })
            })
            .collect()
    }

    #[test]
    fn matches_naive_dft() {
        let x: Vec<C64> = (0..64).map(|k| C64::new((k as f64 * 0.37).sin(), (k as f64 * 1.3).cos())).collect();
        let mut y = x.clone();
        fft_in_place(&mut y, false);
        for (a, b) in y.iter().zip(naive_dft(&x)) {
            assert!((a - b).norm() < 1e-11);
        }
        fft_in_place(&mut y, true);
        for (a, b) in y.iter().zip(&x) {
            assert!((a / 64.0 - b).norm() < 1e-14);
        }
    }

    #[test]
    fn convolution_paths_agree() {
        let a: Vec<C64> = (0..40).map(|k| C64::new(k as f64, 1.0)).collect();
        let b: Vec<C64> = (0..50).map(|k| C64::new(1.0, -(k as f64))).collect();
        let fast = convolve(&a, &b);
        let mut slow = alloc::vec![C64::new(0.0, 0.0); 89];
        for i in 0..40 {
            for j in 0..50 {
                slow[i + j] += a[i] * b[j];
            }
        }
        for (x, y) in fast.iter().zip(&slow) {
            assert!((x - y).norm() < 1e-8 * (1.0 + y.norm()));
        }
    }
}
