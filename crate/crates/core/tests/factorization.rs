use hardy_core::factorization::{
    non_extremality_margin, outer_from_log_modulus, outer_power, pythagorean_factorize_sampled, pythagorean_mate,
    stability_experiment, BlaschkeSpec,
};
use hardy_core::spectral::{analyze, synthesize};
use hardy_core::{BoundaryGrid, DiskGrid, FourierSeries, Rational, C64};

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn cayley() -> Rational {
    Rational::from_real(&[1.0, 1.0], &[1.0, -1.0]).unwrap()
}

/// Midpoint rule on `n` points, which never hits a grid-aligned zero.
fn midpoint_mean(n: usize, f: impl Fn(f64) -> f64) -> f64 {
    (0..n).map(|k| f(2.0 * std::f64::consts::PI * (k as f64 + 0.5) / n as f64)).sum::<f64>() / n as f64
}

#[test]
fn margin_agrees_with_fine_quadrature() {
    let b = FourierSeries::from_real_taylor(2048, &[0.5, 0.5]);
    let oracle = midpoint_mean(1_000_000, |t| {
        let z = C64::from_polar(1.0, t);
        (1.0 - ((c(1.0) + z) * 0.5).norm_sqr()).ln()
    });
    let margin = non_extremality_margin(&b);
    assert!((margin - oracle).abs() < 1e-3);
    assert!((margin + 2.0 * std::f64::consts::LN_2).abs() < 1e-8);
}

#[test]
fn margin_of_smooth_symbol_matches_quadrature() {
    let b = FourierSeries::from_taylor(8, &[c(0.2), C64::new(0.1, 0.3), c(-0.2)]);
    let oracle = midpoint_mean(1 << 16, |t| {
        let z = C64::from_polar(1.0, t);
        let v = c(0.2) + C64::new(0.1, 0.3) * z - z * z * 0.2;
        (1.0 - v.norm_sqr()).ln()
    });
    assert!((non_extremality_margin(&b) - oracle).abs() < 1e-12);
}

#[test]
fn outer_power_boundary_modulus() {
    // zero-free f: boundary modulus is |f|^θ pointwise
    let f = FourierSeries::from_real_taylor(256, &[2.0, 1.0, 0.25]);
    for theta in [0.3, 0.5, 1.7, 3.0] {
        let g = outer_power(&f, theta).unwrap();
        let m = 1 << 12;
        let fv = synthesize(&f, m).unwrap();
        let gv = synthesize(&g, m).unwrap();
        for (x, y) in fv.values().iter().zip(gv.values()) {
            assert!((y.norm() - x.norm().powf(theta)).abs() < 1e-6);
        }
        assert!(g.get(0).re > 0.0 && g.get(0).im.abs() < 1e-15);
    }
    // boundary zero with integer power
    let f = FourierSeries::from_real_taylor(512, &[1.0, -1.0]);
    let cube = outer_power(&f, 3.0).unwrap();
    assert!(cube.max_abs_diff(&FourierSeries::from_real_taylor(512, &[1.0, -3.0, 3.0, -1.0])) < 1e-9);
}

#[test]
fn outer_from_analyzed_log_modulus() {
    // g given through its coefficients: log|2 + z| = log 2 + Re log(1 + z/2)
    let order = 256;
    let m = 1 << 12;
    let samples = BoundaryGrid::from_fn(m, |z| c((c(2.0) + z).norm().ln())).unwrap();
    let coeffs = analyze(&samples, order).unwrap();
    let back = synthesize(&coeffs, m).unwrap();
    let a = outer_from_log_modulus(&back, order).unwrap();
    assert!(a.max_abs_diff(&FourierSeries::from_real_taylor(order, &[2.0, 1.0])) < 1e-10);
}

#[test]
fn mate_pairs_satisfy_identity() {
    let symbols = [
        FourierSeries::from_real_taylor(1024, &[0.5, 0.5]),
        FourierSeries::from_taylor(1024, &[c(0.3), C64::new(0.0, 0.4)]),
        FourierSeries::from_real_taylor(1024, &[0.25, 0.5, 0.25]),
    ];
    for b in symbols {
        let pair = pythagorean_mate(&b, 1e-9).unwrap();
        assert!(pair.identity_residual < 1e-9);
        assert!(pair.a.get(0).re > 0.0 && pair.a.get(0).im == 0.0);
        let m = 1 << 13;
        let av = synthesize(&pair.a, m).unwrap();
        let bv = synthesize(&pair.b, m).unwrap();
        let worst = av
            .values()
            .iter()
            .zip(bv.values())
            .map(|(x, y)| (x.norm_sqr() + y.norm_sqr() - 1.0).abs())
            .fold(0.0, f64::max);
        assert!(worst < 1e-9);
    }
}

#[test]
fn cayley_factorization_recombines() {
    let m = 1 << 14;
    let f = pythagorean_factorize_sampled(&cayley().sample(m).unwrap(), &BlaschkeSpec::default(), 2048, 1e-6).unwrap();
    assert!(f.recombination_residual < 1e-6);
    assert!(f.pair.a.get(0).re > 0.0 && f.outer_b.get(0).re > 0.0);
    assert!(f.pair.a.get(0).im == 0.0 && f.outer_b.get(0).im == 0.0);
}

#[test]
fn cayley_stability_table() {
    let m = 1 << 14;
    let h = cayley().sample(m).unwrap();
    let ps: Vec<FourierSeries> = [4usize, 16, 64, 256, 512]
        .iter()
        .map(|&n| FourierSeries::monomial(2048, n as i64, c(1.0 / n as f64)))
        .collect();
    let t = stability_experiment(&h, &ps, 2048, &DiskGrid::default()).unwrap();
    for r in &t.rows {
        eprintln!("{:.3e} {:.3e} {:.3e}", r.distance, r.a_error, r.b_error);
    }
    assert_eq!(t.strictly_decreasing(), [true; 3]);
    assert!(t.rows.last().unwrap().a_error < 1e-2);
    assert!(t.non_monotone_rows().is_empty());
}
