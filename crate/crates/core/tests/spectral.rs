use hardy_core::spectral::{analyze, duality_pairing, evaluate, garsia_bmoa_norm, hp_quasinorm, synthesize};
use hardy_core::{DiskGrid, Error, FourierSeries, C64};
use proptest::prelude::*;

fn series(order: usize, lo: i64, hi: i64) -> impl Strategy<Value = FourierSeries> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), (hi - lo + 1) as usize).prop_map(move |v| {
        let pairs: Vec<(i64, C64)> = v.iter().enumerate().map(|(i, &(a, b))| (lo + i as i64, C64::new(a, b))).collect();
        FourierSeries::from_pairs(order, &pairs)
    })
}

fn near_boundary() -> DiskGrid {
    DiskGrid::new(vec![0.0, 0.9, 1.0 - 1e-10], 256).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn projections_split_identity(f in series(12, -12, 12)) {
        let p = f.project_plus();
        let m = f.project_minus();
        prop_assert_eq!(p.add(&m), f.clone());
        prop_assert_eq!(p.project_plus(), p.clone());
        prop_assert_eq!(m.project_minus(), m.clone());
        let inner: C64 = p.coeffs().iter().zip(m.coeffs()).map(|(a, b)| a * b.conj()).sum();
        prop_assert_eq!(inner, C64::new(0.0, 0.0));
    }

    #[test]
    fn conjugate_projection_identity(f in series(10, -10, 10)) {
        let lhs = f.project_minus().conj_series();
        let rhs = f.conj_series().project_plus().sub(&FourierSeries::constant(10, f.get(0).conj()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn round_trip(f in series(15, -15, 15)) {
        let back = analyze(&synthesize(&f, 32).unwrap(), 15).unwrap();
        prop_assert!(back.max_abs_diff(&f) < 1e-14);
    }

    #[test]
    fn hp2_is_coefficient_norm(f in series(6, 0, 6)) {
        let v = hp_quasinorm(&f, 2.0, &near_boundary()).unwrap().value;
        prop_assert!((v - f.l2_norm()).abs() < 1e-6);
    }

    #[test]
    fn holder_factorization(g in series(4, 0, 4), h in series(4, 0, 4), s in 1.0f64..4.0, p in 1.0f64..4.0) {
        let q = 1.0 / (1.0 / s + 1.0 / p);
        let grid = DiskGrid::new(vec![0.5, 0.99, 1.0 - 1e-9], 1024).unwrap();
        let gh = g.with_order(8).mul(&h.with_order(8));
        let lhs = hp_quasinorm(&gh, q, &grid).unwrap().value;
        let rhs = hp_quasinorm(&g, s, &grid).unwrap().value * hp_quasinorm(&h, p, &grid).unwrap().value;
        prop_assert!(lhs <= rhs * (1.0 + 1e-6));
    }

    #[test]
    fn garsia_below_sup(u in series(8, 0, 8)) {
        let grid = DiskGrid::dyadic(8, 512).unwrap();
        let g = garsia_bmoa_norm(&u, &grid).value;
        let sup = synthesize(&u, 512).unwrap().max_abs();
        prop_assert!(g <= sup * (1.0 + 1e-12));
    }
}

#[test]
fn evaluate_rejects_boundary() {
    let f = FourierSeries::constant(2, C64::new(1.0, 0.0));
    assert!(matches!(evaluate(&f, C64::new(0.0, 1.0)), Err(Error::OutsideDisk(_))));
}

#[test]
fn hp_norm_at_default_gap() {
    // monotone in r: only the largest radius matters for analytic f
    let f = FourierSeries::from_real_taylor(8, &[1.0, 1.0]);
    let est = hp_quasinorm(&f, 2.0, &DiskGrid::default()).unwrap();
    assert!((est.value - 2f64.sqrt()).abs() < 1e-4);
    assert_eq!(est.radial_gap, 2f64.powi(-14));
}

#[test]
fn pairing_default_grid() {
    let f = FourierSeries::from_fn(64, |n| {
        if n < 0 {
            C64::new(0.0, 0.0)
        } else {
            C64::new(1.0 / ((n + 1) as f64).powi(2), 0.0)
        }
    });
    let m = FourierSeries::monomial(64, 2, C64::new(3.0, 0.0));
    let (v, gap) = duality_pairing(&f, &m, &DiskGrid::default());
    assert!((v - C64::new(1.0 / 3.0, 0.0)).norm() < 1e-3);
    assert!(gap > 0.0);
}

#[test]
fn grid_validation() {
    assert!(matches!(DiskGrid::new(vec![], 16), Err(Error::EmptyRadii)));
    assert!(matches!(DiskGrid::new(vec![1.0], 16), Err(Error::InvalidRadius(_))));
    assert!(matches!(DiskGrid::new(vec![0.5], 12), Err(Error::NotPowerOfTwo(12))));
}
