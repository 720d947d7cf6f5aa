use hardy_core::factorization::{pythagorean_factorize_sampled, BlaschkeSpec, PythagoreanPair};
use hardy_core::hb_space::mate_linearity_residual;
use hardy_core::{BoundaryGrid, C64};

use crate::config::ScenarioConfig;
use crate::error::Result;
use crate::report::{Report, Table};

/// Conjugate-linearity of `h ↦ m₊(h)` on the triple `(h₁, h₂, λ)`.
pub(super) fn run(cfg: &ScenarioConfig, report: &mut Report) -> Result<()> {
    let lin = &cfg.linearity;
    let res = cfg.resolution;
    let tol = cfg.thresholds.linearity;
    report.input("h1", lin.h1.text.as_str());
    report.input("h2", lin.h2.text.as_str());
    report.input("lambda", lin.lambda);
    report.input("m", lin.m.text.as_str());
    report.input("dim", lin.dim);
    report.tolerance("linearity", tol);
    report.tolerance("pair_tol", cfg.thresholds.pair_tol);

    let lambda = C64::new(lin.lambda, 0.0);
    let h1 = lin.h1.spec.boundary(res.samples, res.order)?;
    let h2 = lin.h2.spec.boundary(res.samples, res.order)?;
    let combined = BoundaryGrid::new(h1.values().iter().zip(h2.values()).map(|(x, y)| lambda * x + y).collect())?;
    let pair = |h: &BoundaryGrid| -> std::result::Result<PythagoreanPair, String> {
        pythagorean_factorize_sampled(h, &BlaschkeSpec::default(), res.order, cfg.thresholds.pair_tol)
            .map(|f| f.pair)
            .map_err(|e| e.to_string())
    };
    let (p1, p2, pc) = match (pair(&h1), pair(&h2), pair(&combined)) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        (r1, r2, rc) => {
            let failed: Vec<String> = [("h1", r1.err()), ("h2", r2.err()), ("lambda·h1 + h2", rc.err())]
                .into_iter()
                .filter_map(|(label, e)| e.map(|e| format!("{label}: {e}")))
                .collect();
            report.check("pairs build", false, failed.join("; "));
            return Ok(());
        }
    };
    let m = lin.m.spec.series(res.order)?;
    let residual = match mate_linearity_residual(&p1, &p2, &pc, lambda, &m, lin.dim) {
        Ok(r) => r,
        Err(e) => {
            report.check("mate equations solve", false, e.to_string());
            return Ok(());
        }
    };
    let mut t = Table::new("linearity", &["lambda", "dim", "residual"]);
    t.push(vec![lin.lambda.into(), lin.dim.into(), residual.into()]);
    report.tables.push(t);
    report.check("conjugate linearity", residual < tol, format!("residual {residual:.3e} against {tol:.1e}"));
    Ok(())
}
