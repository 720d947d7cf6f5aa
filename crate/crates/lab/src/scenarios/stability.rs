use hardy_core::factorization::stability_experiment;
use hardy_core::{DiskGrid, FourierSeries, C64};

use crate::config::ScenarioConfig;
use crate::error::Result;
use crate::report::{Report, Table};

/// Pair errors under the perturbations `h_n = h + zⁿ/n`.
pub(super) fn run(cfg: &ScenarioConfig, report: &mut Report) -> Result<()> {
    let st = &cfg.stability;
    let res = cfg.resolution;
    let tol = cfg.thresholds.stability_a_error;
    report.input("h", st.h.text.as_str());
    report.input("perturbations", st.perturbations.clone());
    report.tolerance("stability_a_error", tol);

    let h = st.h.spec.boundary(res.samples, res.order)?;
    let ps: Vec<FourierSeries> = st
        .perturbations
        .iter()
        .map(|&n| FourierSeries::monomial(res.order, n as i64, C64::new(1.0 / n as f64, 0.0)))
        .collect();
    let grid = DiskGrid::dyadic(14, res.samples)?;
    let table = match stability_experiment(&h, &ps, res.order, &grid) {
        Ok(t) => t,
        Err(e) => {
            report.check("stability experiment runs", false, e.to_string());
            return Ok(());
        }
    };
    report.tolerance("radial_gap", table.radial_gap);

    let mut out = Table::new("stability", &["metric", "a_error", "b_error"]);
    for row in &table.rows {
        out.push(vec![row.distance.into(), row.a_error.into(), row.b_error.into()]);
    }
    for (name, ok) in ["metric", "a_error", "b_error"].iter().zip(table.strictly_decreasing()) {
        report.check(
            format!("{name} strictly decreasing"),
            ok,
            format!("non-monotone rows {:?}", table.non_monotone_rows()),
        );
    }
    let last = table.rows.last().map_or(f64::NAN, |r| r.a_error);
    report.check("final a_error", last < tol, format!("{last:.3e} against {tol:.1e}"));
    report.tables.push(out);
    Ok(())
}
