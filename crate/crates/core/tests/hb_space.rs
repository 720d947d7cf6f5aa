use hardy_core::factorization::{
    outer_power, pythagorean_factorize_sampled, pythagorean_mate, BlaschkeSpec, PythagoreanPair,
};
use hardy_core::hb_space::{
    lotto_sarason_check, mate_linearity_residual, membership_diagnostic, solve_mate, toeplitz_preimage, Membership,
    MembershipConfig, MultiplierConfig, MultiplierVerdict,
};
use hardy_core::operators::{apply, toeplitz_matrix};
use hardy_core::{FourierSeries, Rational, C64};

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn rational_pair() -> PythagoreanPair {
    pythagorean_mate(&FourierSeries::from_real_taylor(2048, &[0.5, 0.5]), 1e-9).unwrap()
}

fn powerlaw(s: f64) -> FourierSeries {
    FourierSeries::from_fn(2048, |n| if n < 0 { c(0.0) } else { c((n as f64 + 1.0).powf(-s)) })
}

#[test]
fn closed_form_mates_from_computed_pair() {
    let pair = rational_pair();
    let one = solve_mate(&pair, &FourierSeries::constant(4, c(1.0)), 256).unwrap();
    assert!(one.residual < 1e-10);
    assert!((one.hb_norm - 2f64.sqrt()).abs() < 1e-6);
    let z = solve_mate(&pair, &FourierSeries::monomial(4, 1, c(1.0)), 256).unwrap();
    assert!(z.residual < 1e-10);
    assert!(z.f_plus.max_abs_diff(&FourierSeries::from_real_taylor(255, &[2.0, 1.0])) < 1e-8);
}

#[test]
fn mate_is_stable_across_dims() {
    let pair = rational_pair();
    let f = FourierSeries::from_taylor(8, &[c(1.0), C64::new(0.5, -0.5), c(0.25)]);
    let small = solve_mate(&pair, &f, 128).unwrap();
    let large = solve_mate(&pair, &f, 256).unwrap();
    for n in 0..64 {
        assert!((small.f_plus.get(n) - large.f_plus.get(n)).norm() < 1e-6);
    }
    assert!(small.hb_norm >= f.l2_norm());
}

#[test]
fn a_times_polynomial_is_in_space() {
    let pair = rational_pair();
    let f = pair.a.mul(&FourierSeries::from_real_taylor(2048, &[1.0, 0.0, -2.0]));
    let rep = membership_diagnostic(&pair, &f, &[64, 128, 256], &MembershipConfig::default()).unwrap();
    assert_eq!(rep.verdict, Membership::InSpace);
}

#[test]
fn preimage_round_trip() {
    let a = FourierSeries::from_real_taylor(16, &[0.5, -0.5]);
    let m = FourierSeries::from_taylor(16, &[c(1.0), C64::new(0.0, 1.0), c(-0.5)]);
    let pre = toeplitz_preimage(&m, &a, 32).unwrap();
    let x: Vec<C64> = (0..32).map(|n| pre.u.get(n)).collect();
    let back = apply(&toeplitz_matrix(&a, 32), &x).unwrap();
    let err: f64 = back.iter().enumerate().map(|(n, v)| (v - m.get(n as i64)).norm_sqr()).sum::<f64>().sqrt();
    assert!(err <= pre.residual + 1e-14);
}

#[test]
fn multiplier_panel() {
    let dims = [64, 256, 1024];
    let cfg = MultiplierConfig { composed_iterations: 0, ..MultiplierConfig::default() };
    let constant = PythagoreanPair::constant(2048, c(0.6), 1e-12).unwrap();
    let rational = rational_pair();
    // a = ((1 - z)/2)³ has a triple boundary zero; b is its own outer mate.
    let cube = outer_power(&FourierSeries::from_real_taylor(2048, &[0.5, -0.5]), 3.0).unwrap();
    let swapped = pythagorean_mate(&cube, 1e-8).unwrap();
    let deep = PythagoreanPair::new(swapped.a, cube, 1e-8).unwrap();

    let cases = [
        (&constant, powerlaw(1.1), MultiplierVerdict::Multiplier),
        (&rational, powerlaw(1.1), MultiplierVerdict::NotCertified),
        (&rational, powerlaw(2.2), MultiplierVerdict::Multiplier),
        (&rational, FourierSeries::monomial(2048, 1, c(1.0)), MultiplierVerdict::Multiplier),
        (&deep, FourierSeries::constant(2048, c(1.0)), MultiplierVerdict::Multiplier),
        (&deep, powerlaw(2.0), MultiplierVerdict::NotCertified),
    ];
    for (pair, m, want) in cases {
        let rep = lotto_sarason_check(pair, &m, &dims, &cfg).unwrap();
        assert_eq!(rep.verdict, want, "{:?}", rep.u_garsia());
    }
}

#[test]
fn conjugate_linearity_triple() {
    let m = 1 << 14;
    let inner = BlaschkeSpec::default();
    let h1 = Rational::from_real(&[1.0, 1.0], &[1.0, -1.0]).unwrap();
    let h = Rational::from_real(&[3.0, 1.0], &[1.0, -1.0]).unwrap();
    let p1 = pythagorean_factorize_sampled(&h1.sample(m).unwrap(), &inner, 2048, 1e-6).unwrap().pair;
    let p2 = PythagoreanPair::constant(2048, c(0.5f64.sqrt()), 1e-12).unwrap();
    let pc = pythagorean_factorize_sampled(&h.sample(m).unwrap(), &inner, 2048, 1e-6).unwrap().pair;
    let z = FourierSeries::monomial(2048, 1, c(1.0));
    let r = mate_linearity_residual(&p1, &p2, &pc, c(2.0), &z, 256).unwrap();
    assert!(r < 1e-6, "{r}");
    let mc = solve_mate(&pc, &z, 256).unwrap().f_plus;
    assert!(mc.max_abs_diff(&FourierSeries::from_real_taylor(255, &[4.0, 3.0])) < 1e-6);
}
