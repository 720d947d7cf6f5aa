//! Invariant suite on seeded random series.

use std::f64::consts::PI;

use hardy_core::factorization::pythagorean_mate;
use hardy_core::operators::{hankel_matrix, toeplitz_matrix, LinearOperator};
use hardy_core::spectral::{garsia_bmoa_norm, hp_quasinorm, synthesize};
use hardy_core::{DiskGrid, FourierSeries, C64};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::ScenarioConfig;
use crate::error::Result;
use crate::report::{Report, Table};

/// `(s, p)` exponent pairs of the Hölder check; `1/q = 1/s + 1/p`.
const HOLDER_EXPONENTS: [(f64, f64); 5] = [(2.0, 2.0), (4.0, 4.0), (1.0, 1.0), (3.0, 1.5), (0.5, 0.5)];
const HOLDER_SLACK: f64 = 1e-6;

struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    fn coeff(&mut self) -> C64 {
        C64::new(self.rng.random_range(-1.0..1.0), self.rng.random_range(-1.0..1.0))
    }

    /// Two-sided series with coefficients in `-degree..=degree`, stored at `order`.
    fn two_sided(&mut self, degree: usize, order: usize) -> FourierSeries {
        let pairs: Vec<(i64, C64)> = (-(degree as i64)..=degree as i64).map(|n| (n, self.coeff())).collect();
        FourierSeries::from_pairs(order, &pairs)
    }

    fn analytic(&mut self, degree: usize, order: usize) -> FourierSeries {
        let taylor: Vec<C64> = (0..=degree).map(|_| self.coeff()).collect();
        FourierSeries::from_taylor(order, &taylor)
    }
}

/// Worst value of one invariant over the trials; the bounds are recorded
/// as signed `ratio - 1`.
struct Invariant {
    name: &'static str,
    worst: f64,
    tol: f64,
}

pub(super) fn run(cfg: &ScenarioConfig, report: &mut Report) -> Result<()> {
    let s = cfg.sanity;
    let tol = cfg.thresholds.invariant;
    let pair_tol = cfg.thresholds.pair_tol;
    report.input("seed", s.seed);
    report.input("trials", s.trials);
    report.input("degree", s.degree);
    report.tolerance("invariant", tol);
    report.tolerance("holder_slack", HOLDER_SLACK);
    report.tolerance("pair_tol", pair_tol);

    let mut rng = Sampler { rng: ChaCha8Rng::seed_from_u64(s.seed) };
    let d = s.degree;
    let order = 8 * d;
    let mut inv = vec![
        Invariant { name: "projection idempotence", worst: f64::NEG_INFINITY, tol },
        Invariant { name: "projection complementarity", worst: f64::NEG_INFINITY, tol },
        Invariant { name: "conjugate projection identity", worst: f64::NEG_INFINITY, tol },
        Invariant { name: "holder factorization", worst: f64::NEG_INFINITY, tol: HOLDER_SLACK },
        Invariant { name: "garsia below sup", worst: f64::NEG_INFINITY, tol },
        Invariant { name: "toeplitz window agreement", worst: f64::NEG_INFINITY, tol },
        Invariant { name: "hankel window agreement", worst: f64::NEG_INFINITY, tol },
        Invariant { name: "pythagorean identity", worst: f64::NEG_INFINITY, tol: pair_tol },
    ];
    let mut record = |i: usize, v: f64| inv[i].worst = inv[i].worst.max(if v.is_nan() { f64::INFINITY } else { v });

    let holder_grid = DiskGrid::new(vec![0.0, 0.5, 0.9, 0.999], 1024)?;
    let garsia_grid = DiskGrid::dyadic(10, 1024)?;
    let dim = 2 * d;

    for _ in 0..s.trials {
        let f = rng.two_sided(d, order);
        let (fp, fm) = (f.project_plus(), f.project_minus());
        record(0, fp.project_plus().max_abs_diff(&fp).max(fm.project_minus().max_abs_diff(&fm)));
        record(1, fp.add(&fm).max_abs_diff(&f).max(fp.project_minus().l2_norm()).max(fm.project_plus().l2_norm()));

        let lhs = fm.conj_series();
        let rhs = f.conj_series().project_plus().sub(&FourierSeries::constant(order, f.get(0).conj()));
        record(2, lhs.max_abs_diff(&rhs));

        let g = rng.analytic(d, order);
        let h = rng.analytic(d, order);
        let gh = g.mul(&h);
        for (sx, px) in HOLDER_EXPONENTS {
            let q = 1.0 / (1.0 / sx + 1.0 / px);
            let left = hp_quasinorm(&gh, q, &holder_grid)?.value;
            let right = hp_quasinorm(&g, sx, &holder_grid)?.value * hp_quasinorm(&h, px, &holder_grid)?.value;
            record(3, left / right - 1.0);
        }

        // Bernstein: sup|u| ≤ max over M samples / (1 - π·deg/M).
        let samples = 4096;
        let sampled = synthesize(&g, samples)?.max_abs();
        let sup = sampled / (1.0 - PI * d as f64 / samples as f64);
        let garsia = garsia_bmoa_norm(&g, &garsia_grid).value;
        record(4, garsia / sup - 1.0);

        let x: Vec<C64> = (0..dim).map(|_| rng.coeff()).collect();
        let xs = FourierSeries::from_taylor(order, &x);
        let symbol = rng.two_sided(d, order);
        let t_out = toeplitz_matrix(&symbol, dim).apply(&x)?;
        let want = symbol.conj_series().mul(&xs);
        let scale = 1.0 + want.l2_norm();
        record(5, (0..dim).map(|j| (t_out[j] - want.get(j as i64)).norm()).fold(0.0, f64::max) / scale);

        let m = rng.analytic(2 * d, order);
        let h_out = hankel_matrix(&m, dim).apply(&x)?;
        let want = m.conj_series().mul(&xs);
        let scale = 1.0 + want.l2_norm();
        record(6, (0..dim).map(|j| (h_out[j] - want.get(-(j as i64) - 1)).norm()).fold(0.0, f64::max) / scale);

        let b = rng.analytic(d, 64);
        let peak = synthesize(&b, 1024)?.max_abs();
        let b = b.scale(C64::new(0.9 / peak, 0.0));
        match pythagorean_mate(&b, pair_tol) {
            Ok(pair) => record(7, pair.identity_residual),
            Err(_) => record(7, f64::INFINITY),
        }
    }

    let mut table = Table::new("invariants", &["name", "trials", "worst", "tolerance", "passed"]);
    for i in &inv {
        let passed = i.worst <= i.tol;
        table.push(vec![i.name.into(), s.trials.into(), i.worst.into(), i.tol.into(), passed.into()]);
        report.check(i.name, passed, format!("worst {:.3e} against {:.1e}", i.worst, i.tol));
    }
    report.tables.push(table);
    Ok(())
}
