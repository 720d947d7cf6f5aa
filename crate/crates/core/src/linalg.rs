//! Small dense least-squares helpers shared by the fitting routines.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

/// Least-squares solution of `Σ_j x_j·cols[j] ≈ y` by modified Gram–Schmidt,
/// with the root-mean-square residual. Columns are rescaled internally.
pub(crate) fn least_squares(cols: &[Vec<f64>], y: &[f64]) -> Option<(Vec<f64>, f64)> {
    let k = cols.len();
    let n = y.len();
    if k == 0 || n < k || cols.iter().any(|c| c.len() != n) {
        return None;
    }
    let scales: Vec<f64> = cols.iter().map(|c| c.iter().map(|v| v * v).sum::<f64>().sqrt()).collect();
    if scales.iter().any(|&s| !(s > 0.0) || !s.is_finite()) {
        return None;
    }
    let mut q: Vec<Vec<f64>> = cols.iter().zip(&scales).map(|(c, s)| c.iter().map(|v| v / s).collect()).collect();
    let mut r = vec![vec![0.0; k]; k];
    for j in 0..k {
        // Two orthogonalization passes keep Q orthonormal for the nearly
        // collinear power bases used by the fits.
        for _ in 0..2 {
            for i in 0..j {
                let dot: f64 = q[i].iter().zip(&q[j]).map(|(a, b)| a * b).sum();
                r[i][j] += dot;
                let (head, tail) = q.split_at_mut(j);
                for (b, a) in tail[0].iter_mut().zip(&head[i]) {
                    *b -= dot * a;
                }
            }
        }
        let norm = q[j].iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm < 1e-13 {
            return None;
        }
        r[j][j] = norm;
        for v in q[j].iter_mut() {
            *v /= norm;
        }
    }
    let qty: Vec<f64> = q.iter().map(|qi| qi.iter().zip(y).map(|(a, b)| a * b).sum()).collect();
    let mut x = vec![0.0; k];
    for j in (0..k).rev() {
        let mut acc = qty[j];
        for i in j + 1..k {
            acc -= r[j][i] * x[i];
        }
        x[j] = acc / r[j][j];
    }
    let mut sq = 0.0;
    for (row, &yi) in y.iter().enumerate() {
        let fit: f64 = (0..k).map(|j| x[j] * cols[j][row] / scales[j]).sum();
        sq += (yi - fit) * (yi - fit);
    }
    for (xj, s) in x.iter_mut().zip(&scales) {
        *xj /= s;
    }
    Some((x, (sq / n as f64).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_exact_line() {
        let xs: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let y: Vec<f64> = xs.iter().map(|x| 3.0 - 0.5 * x).collect();
        let (c, res) = least_squares(&[vec![1.0; 10], xs], &y).unwrap();
        assert!((c[0] - 3.0).abs() < 1e-12 && (c[1] + 0.5).abs() < 1e-12);
        assert!(res < 1e-12);
    }

    #[test]
    fn rejects_dependent_columns() {
        assert!(least_squares(&[vec![1.0; 4], vec![2.0; 4]], &[1.0; 4]).is_none());
    }
}
