use std::time::Instant;

use hardy_core::operators::{
    apply, commutation_residual, hankel_continuity_probe, hankel_matrix, operator_norm, toeplitz_matrix, DenseMatrix,
    LinearOperator, ProbeConfig, ProbeSpace, ProbeVerdict,
};
use hardy_core::{FourierSeries, C64};
use nalgebra::DMatrix;
use proptest::prelude::*;

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn to_nalgebra(m: &DenseMatrix, n: usize) -> DMatrix<nalgebra::Complex<f64>> {
    DMatrix::from_fn(n, n, |j, k| {
        let v = m.get(j, k);
        nalgebra::Complex::new(v.re, v.im)
    })
}

fn svd(m: &DenseMatrix, n: usize) -> Vec<f64> {
    to_nalgebra(m, n).singular_values().iter().copied().collect()
}

fn powerlaw(order: usize, s: f64) -> FourierSeries {
    FourierSeries::from_fn(order, |n| if n < 0 { c(0.0) } else { c((n as f64 + 1.0).powf(-s)) })
}

#[test]
fn rank_one_hankel() {
    let m = FourierSeries::from_fn(64, |n| if n < 0 { c(0.0) } else { c((-(n as f64)).exp()) });
    let h = hankel_matrix(&m, 16);
    for j in 0..16 {
        for k in 0..16 {
            assert!((h.matrix().get(j, k) - c((-((j + k + 1) as f64)).exp())).norm() < 1e-15);
        }
    }
    let mut s = svd(h.matrix(), 16);
    s.sort_by(|a, b| b.partial_cmp(a).unwrap());
    assert!(s[1] < 1e-10 * s[0]);
}

#[test]
fn power_iteration_matches_svd() {
    let cases = [
        toeplitz_matrix(&FourierSeries::from_real_taylor(8, &[0.5, -0.5]), 32).matrix().clone(),
        hankel_matrix(&powerlaw(128, 1.1), 40).matrix().clone(),
        DenseMatrix::from_fn(12, 12, |j, k| C64::new(((j * 7 + k * 3) % 5) as f64 - 2.0, (j as f64 - k as f64).sin())),
    ];
    for m in cases {
        let n = m.nrows();
        let oracle = svd(&m, n).into_iter().fold(0.0, f64::max);
        let est = operator_norm(&m).unwrap();
        assert!(est.converged);
        assert!((est.value - oracle).abs() <= 1e-8 * oracle, "{} vs {}", est.value, oracle);
    }
}

#[test]
fn truncation_norms_are_nested() {
    let m = powerlaw(256, 1.5);
    let mut prev = 0.0;
    for dim in [4, 8, 16, 32, 64] {
        let v = operator_norm(&hankel_matrix(&m, dim)).unwrap().value;
        assert!(v >= prev - 1e-12);
        prev = v;
    }
}

#[test]
fn commutation_on_rational_pair() {
    let p = FourierSeries::from_real_taylor(4, &[0.5, 0.5]);
    let q = FourierSeries::from_real_taylor(4, &[0.5, -0.5]);
    assert!(commutation_residual(&p, &q, 64).unwrap() < 1e-12);
}

fn series_strategy(order: usize, max_deg: usize) -> impl Strategy<Value = FourierSeries> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=max_deg + 1).prop_map(move |v| {
        FourierSeries::from_taylor(order, &v.iter().map(|&(a, b)| C64::new(a, b)).collect::<Vec<_>>())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn toeplitz_agrees_with_projection(g in series_strategy(16, 4), f in series_strategy(16, 6)) {
        let dim = 12;
        let x: Vec<C64> = (0..dim).map(|n| f.get(n as i64)).collect();
        let got = apply(&toeplitz_matrix(&g, dim), &x).unwrap();
        let want = g.conj_series().mul(&f).project_plus();
        for (n, v) in got.iter().enumerate() {
            prop_assert!((v - want.get(n as i64)).norm() < 1e-12);
        }
    }

    #[test]
    fn hankel_agrees_with_projection(m in series_strategy(32, 10), f in series_strategy(32, 6)) {
        let dim = 12;
        let x: Vec<C64> = (0..dim).map(|n| f.get(n as i64)).collect();
        let got = apply(&hankel_matrix(&m, dim), &x).unwrap();
        let want = m.conj_series().mul(&f).project_minus();
        for (j, v) in got.iter().enumerate() {
            prop_assert!((v - want.get(-(j as i64) - 1)).norm() < 1e-12);
        }
    }

    #[test]
    fn diagonal_structure(m in series_strategy(32, 20)) {
        let t = toeplitz_matrix(&m, 10);
        let h = hankel_matrix(&m, 10);
        for j in 1..10 {
            for k in 1..10 {
                prop_assert_eq!(t.matrix().get(j, k), t.matrix().get(j - 1, k - 1));
                prop_assert_eq!(h.matrix().get(j, k - 1), h.matrix().get(j - 1, k));
            }
        }
    }

    #[test]
    fn polynomial_commutation(g1 in series_strategy(8, 3), g2 in series_strategy(8, 3)) {
        prop_assert!(commutation_residual(&g1, &g2, 24).unwrap() < 1e-12);
    }
}

#[test]
fn hp1_probe_separates_power_laws() {
    let start = Instant::now();
    let cfg = ProbeConfig::default();
    let dims = [64, 256, 1024];
    let smooth = hankel_continuity_probe(&powerlaw(2048, 2.2), ProbeSpace::Hp(1.0), &dims, &cfg).unwrap();
    let rough = hankel_continuity_probe(&powerlaw(2048, 1.1), ProbeSpace::Hp(1.0), &dims, &cfg).unwrap();
    eprintln!("{:?}\n{:?}\n{:?}", smooth, rough, start.elapsed());
    assert_eq!(smooth.verdict, ProbeVerdict::Bounded);
    assert_eq!(rough.verdict, ProbeVerdict::Divergent);
    assert!(smooth.norms.windows(2).all(|w| w[1] >= w[0]));
}
