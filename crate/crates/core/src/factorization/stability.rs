//! Convergence of Pythagorean factorizations under perturbation of `h`.

use alloc::vec::Vec;

use super::pair::quotient_mate_sampled;
use crate::spectral::{privalov_distance, sample_at_radius, BoundaryGrid, DiskGrid, FourierSeries};
use crate::{Result, C64};

/// One perturbation: metric distance of `h_n` to `h` and the resulting
/// max-grid errors of the pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StabilityRow {
    pub distance: f64,
    pub a_error: f64,
    pub b_error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilityTable {
    pub rows: Vec<StabilityRow>,
    pub radial_gap: f64,
}

impl StabilityTable {
    /// Whether every column is strictly decreasing down the rows.
    pub fn strictly_decreasing(&self) -> [bool; 3] {
        let col = |f: fn(&StabilityRow) -> f64| self.rows.windows(2).all(|w| f(&w[1]) < f(&w[0]));
        [col(|r| r.distance), col(|r| r.a_error), col(|r| r.b_error)]
    }

    /// Indices of rows where some column fails to decrease.
    pub fn non_monotone_rows(&self) -> Vec<usize> {
        (1..self.rows.len())
            .filter(|&i| {
                let (p, r) = (&self.rows[i - 1], &self.rows[i]);
                !(r.distance < p.distance && r.a_error < p.a_error && r.b_error < p.b_error)
            })
            .collect()
    }
}

/// Computes the pair of `h` and of each `h_n = h + p_n`, reporting the
/// Smirnov distance `∫ log(1 + |p_n|)` next to the max-grid errors of `a_n`
/// and `b_n`.
///
/// Perturbed quotients generally acquire zeros inside the disk, so `b_n`
/// is formed as `h_n·a_n` on the grid rather than through an outer
/// factorization; `a_n` depends only on `|h_n|`. The `b` column skips grid
/// points where `h` is infinite.
pub fn stability_experiment(
    h: &BoundaryGrid,
    perturbations: &[FourierSeries],
    order: usize,
    grid: &DiskGrid,
) -> Result<StabilityTable> {
    let samples = h.samples();
    let pair_on_grid = |hv: &[C64]| -> Result<(Vec<C64>, Vec<C64>)> {
        let a = quotient_mate_sampled(&BoundaryGrid::new(hv.to_vec())?, order)?;
        let av = sample_at_radius(&a, 1.0, samples);
        let bv = hv.iter().zip(&av).map(|(x, y)| if x.is_finite() { x * y } else { C64::new(0.0, 0.0) }).collect();
        Ok((av, bv))
    };
    let finite: Vec<bool> = h.values().iter().map(|v| v.is_finite()).collect();
    let (a, b) = pair_on_grid(h.values())?;
    let zero = FourierSeries::zero(0);
    let max_diff = |x: &[C64], y: &[C64]| {
        x.iter().zip(y).zip(&finite).filter(|(_, f)| **f).map(|((u, v), _)| (u - v).norm()).fold(0.0, f64::max)
    };

    let mut rows = Vec::with_capacity(perturbations.len());
    for p in perturbations {
        let pv = sample_at_radius(&p.project_plus(), 1.0, samples);
        let hn: Vec<C64> = h.values().iter().zip(&pv).map(|(x, y)| x + y).collect();
        let (an, bn) = pair_on_grid(&hn)?;
        rows.push(StabilityRow {
            distance: privalov_distance(p, &zero, 1.0, grid)?.value,
            a_error: an.iter().zip(&a).map(|(u, v)| (u - v).norm()).fold(0.0, f64::max),
            b_error: max_diff(&bn, &b),
        });
    }
    Ok(StabilityTable { rows, radial_gap: 1.0 - grid.max_radius() })
}
#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_perturbations_give_zero_rows() {
        let h = BoundaryGrid::from_real(&[1.0; 256]).unwrap();
        let ps = [FourierSeries::zero(8), FourierSeries::zero(8)];
        let grid = DiskGrid::dyadic(8, 256).unwrap();
        let t = stability_experiment(&h, &ps, 8, &grid).unwrap();
        assert!(t.rows.iter().all(|r| r.distance == 0.0 && r.a_error == 0.0 && r.b_error == 0.0));
    }

    #[test]
    fn constant_shifts_converge_like_one_over_n() {
        let h = BoundaryGrid::from_real(&[1.0; 256]).unwrap();
        let ns = [4.0, 8.0, 16.0, 32.0];
        let ps: Vec<FourierSeries> = ns.iter().map(|n| FourierSeries::constant(8, C64::new(1.0 / n, 0.0))).collect();
        let grid = DiskGrid::dyadic(8, 256).unwrap();
        let t = stability_experiment(&h, &ps, 8, &grid).unwrap();
        assert_eq!(t.strictly_decreasing(), [true; 3]);
        for (row, n) in t.rows.iter().zip(ns) {
            let exact = 0.5f64.sqrt() - 1.0 / (1.0 + (1.0 + 1.0 / n).powi(2)).sqrt();
            assert!((row.a_error - exact).abs() < 1e-12);
            assert!(row.a_error * n > 0.1 && row.a_error * n < 0.5);
        }
    }
}
