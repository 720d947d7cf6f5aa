//! Toeplitz preimages and multiplier certification.

use alloc::vec::Vec;

use super::mate::{
    band, condition_estimate, head, l2, solve_mate, upper_toeplitz_apply, upper_toeplitz_solve, CONDITION_CAP,
};
use crate::factorization::PythagoreanPair;
use crate::operators::{hankel_matrix, operator_norm_with, Adjoint, NormEstimate, Product};
use crate::spectral::{garsia_bmoa_norm, DiskGrid, FourierSeries};
use crate::{Error, Result, C64};

/// Solution `u` of `T_ā u = m` at a truncation.
#[derive(Clone, Debug, PartialEq)]
pub struct Preimage {
    pub u: FourierSeries,
    pub residual: f64,
    pub condition: f64,
    pub ill_conditioned: bool,
}

fn series(v: &[C64]) -> FourierSeries {
    FourierSeries::from_taylor(v.len().saturating_sub(1), v)
}

/// Solves `T_ā u = m` on the leading `dim` coefficients.
pub fn toeplitz_preimage(m: &FourierSeries, a: &FourierSeries, dim: usize) -> Result<Preimage> {
    if dim == 0 {
        return Err(Error::InvalidParameter("dim must be positive"));
    }
    let mv = head(m, dim);
    let av = band(a, dim);
    let u = upper_toeplitz_solve(&av, &mv)?;
    let back = upper_toeplitz_apply(&av, &u);
    let residual = l2(&back.iter().zip(&mv).map(|(x, y)| x - y).collect::<Vec<_>>());
    let condition = condition_estimate(&av, dim);
    Ok(Preimage { u: series(&u), residual, condition, ill_conditioned: !(condition <= CONDITION_CAP) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplierVerdict {
    Multiplier,
    NotCertified,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MultiplierConfig {
    /// Largest acceptable Garsia norm of `u`.
    pub garsia_threshold: f64,
    /// Largest acceptable growth `last/first` of the Garsia norm.
    pub growth_threshold: f64,
    /// Largest acceptable relative change over the last two dims.
    pub stable_rtol: f64,
    /// Iteration cap for the composed Hankel norms; 0 skips them.
    pub composed_iterations: usize,
}

impl Default for MultiplierConfig {
    fn default() -> Self {
        Self { garsia_threshold: 1e6, growth_threshold: 1.5, stable_rtol: 0.1, composed_iterations: 200 }
    }
}

/// Per-dim data of a multiplier check.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplierStep {
    pub dim: usize,
    pub u_garsia: f64,
    pub mate_garsia: f64,
    pub preimage_residual: f64,
    /// `‖H*_ū H_ā‖` and `‖H*_ū H_b̄‖` on the truncation, when computed.
    pub composed_a: Option<NormEstimate>,
    pub composed_b: Option<NormEstimate>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MultiplierReport {
    pub m: FourierSeries,
    /// Preimage at the largest dim.
    pub u: FourierSeries,
    /// `T_b̄ u` at the largest dim.
    pub mate_of_m: FourierSeries,
    pub steps: Vec<MultiplierStep>,
    pub verdict: MultiplierVerdict,
}

impl MultiplierReport {
    pub fn u_garsia(&self) -> Vec<f64> {
        self.steps.iter().map(|s| s.u_garsia).collect()
    }

    pub fn mate_garsia(&self) -> Vec<f64> {
        self.steps.iter().map(|s| s.mate_garsia).collect()
    }
}

fn certify(values: &[f64], config: &MultiplierConfig) -> MultiplierVerdict {
    let n = values.len();
    let (first, prev, last) = (values[0], values[n.saturating_sub(2)], values[n - 1]);
    if values.iter().any(|v| !v.is_finite()) || last > config.garsia_threshold {
        return MultiplierVerdict::NotCertified;
    }
    if last == 0.0 {
        return MultiplierVerdict::Multiplier;
    }
    let growth_ok = first > 0.0 && last / first <= config.growth_threshold;
    let stable = (last - prev).abs() / last <= config.stable_rtol;
    if growth_ok && stable {
        MultiplierVerdict::Multiplier
    } else {
        MultiplierVerdict::NotCertified
    }
}

/// Certifies `m ∈ Mult(H(b))` through the sufficient condition `m = T_ā u`
/// with `u ∈ BMOA`, tracked along a dim ladder. The composed Hankel norms
/// are reported without entering the verdict.
pub fn lotto_sarason_check(
    pair: &PythagoreanPair,
    m: &FourierSeries,
    dims: &[usize],
    config: &MultiplierConfig,
) -> Result<MultiplierReport> {
    if dims.is_empty() || dims.windows(2).any(|w| w[1] <= w[0]) || dims[0] == 0 {
        return Err(Error::InvalidParameter("dims must be positive and increasing"));
    }
    let mut steps = Vec::with_capacity(dims.len());
    let mut last = None;
    for &dim in dims {
        let pre = toeplitz_preimage(m, &pair.a, dim)?;
        let uv = head(&pre.u, dim);
        let mate = series(&upper_toeplitz_apply(&band(&pair.b, dim), &uv));
        let grid = DiskGrid::for_truncation(dim);
        let u_garsia = garsia_bmoa_norm(&pre.u, &grid).value;
        let mate_garsia = garsia_bmoa_norm(&mate, &grid).value;
        let (composed_a, composed_b) = if config.composed_iterations > 0 {
            let hu = hankel_matrix(&pre.u, dim);
            let ha = hankel_matrix(&pair.a, dim);
            let hb = hankel_matrix(&pair.b, dim);
            let ua = Product { left: &Adjoint(&hu), right: &ha };
            let ub = Product { left: &Adjoint(&hu), right: &hb };
            (
                Some(operator_norm_with(&ua, config.composed_iterations)?),
                Some(operator_norm_with(&ub, config.composed_iterations)?),
            )
        } else {
            (None, None)
        };
        steps.push(MultiplierStep {
            dim,
            u_garsia,
            mate_garsia,
            preimage_residual: pre.residual,
            composed_a,
            composed_b,
        });
        last = Some((pre.u, mate));
    }
    let values: Vec<f64> = steps.iter().map(|s| s.u_garsia).collect();
    let verdict = certify(&values, config);
    let (u, mate_of_m) = last.expect("dims non-empty");
    Ok(MultiplierReport { m: m.clone(), u, mate_of_m, steps, verdict })
}

/// `‖m₊(λh₁ + h₂) - conj(λ)·m₊(h₁) - m₊(h₂)‖₂`, where `m₊(h)` is the mate
/// of `m` in the space built on the Pythagorean pair of `h`.
pub fn mate_linearity_residual(
    pair1: &PythagoreanPair,
    pair2: &PythagoreanPair,
    combined: &PythagoreanPair,
    lambda: C64,
    m: &FourierSeries,
    dim: usize,
) -> Result<f64> {
    let m1 = solve_mate(pair1, m, dim)?.f_plus;
    let m2 = solve_mate(pair2, m, dim)?.f_plus;
    let mc = solve_mate(combined, m, dim)?.f_plus;
    let diff: Vec<C64> = (0..dim as i64).map(|n| mc.get(n) - lambda.conj() * m1.get(n) - m2.get(n)).collect();
    Ok(l2(&diff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn preimage_examples() {
        let m = FourierSeries::from_taylor(6, &[c(1.0), C64::new(0.0, 2.0), c(3.0)]);
        let one = FourierSeries::constant(4, c(1.0));
        assert!(toeplitz_preimage(&m, &one, 8).unwrap().u.max_abs_diff(&m.with_order(7)) < 1e-15);

        let a = FourierSeries::from_real_taylor(4, &[0.5, -0.5]);
        let u = toeplitz_preimage(&FourierSeries::constant(4, c(1.0)), &a, 16).unwrap();
        assert!(u.u.max_abs_diff(&FourierSeries::constant(15, c(2.0))) < 1e-14);
        let u = toeplitz_preimage(&FourierSeries::monomial(4, 1, c(1.0)), &a, 16).unwrap();
        assert!(u.u.max_abs_diff(&FourierSeries::from_real_taylor(15, &[2.0, 2.0])) < 1e-14);
        assert!(u.residual < 1e-14);
    }

    #[test]
    fn constants_and_polynomials_are_multipliers() {
        let pair = PythagoreanPair::new(
            FourierSeries::from_real_taylor(8, &[0.5, 0.5]),
            FourierSeries::from_real_taylor(8, &[0.5, -0.5]),
            1e-12,
        )
        .unwrap();
        let dims = [16, 32, 64];
        let cfg = MultiplierConfig::default();
        let k = lotto_sarason_check(&pair, &FourierSeries::constant(4, c(3.0)), &dims, &cfg).unwrap();
        assert_eq!(k.verdict, MultiplierVerdict::Multiplier);
        let z = lotto_sarason_check(&pair, &FourierSeries::monomial(4, 1, c(1.0)), &dims, &cfg).unwrap();
        assert_eq!(z.verdict, MultiplierVerdict::Multiplier);
        assert!(z.u.max_abs_diff(&FourierSeries::from_real_taylor(63, &[2.0, 2.0])) < 1e-14);
    }

    #[test]
    fn linearity_trivial_cases() {
        let pair = PythagoreanPair::constant(4, c(0.6), 1e-14).unwrap();
        let z = FourierSeries::monomial(4, 1, c(1.0));
        let r = mate_linearity_residual(&pair, &pair, &pair, c(0.0), &z, 16).unwrap();
        assert_eq!(r, 0.0);
    }
}
