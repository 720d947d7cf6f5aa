//! Hankel continuity against multiplier certification over a pair panel.
//!
//! For each symbol `m` the probe verdict is compared with the intersection
//! of the multiplier verdicts over all pairs: `Bounded` must meet
//! `Multiplier` on every pair, `Divergent` must meet `NotCertified` on at
//! least one.

use hardy_core::classes::{gevrey_membership, lipschitz_ladder};
use hardy_core::hb_space::{lotto_sarason_check, MultiplierReport, MultiplierVerdict};
use hardy_core::operators::{hankel_continuity_probe, ContinuityProbeReport, ProbeSpace, ProbeVerdict};
use hardy_core::{DiskGrid, FourierSeries};

use super::par_map;
use crate::config::{Scenario, ScenarioConfig};
use crate::error::Result;
use crate::report::{Report, Table, Value};

fn space(cfg: &ScenarioConfig) -> ProbeSpace {
    match cfg.scenario {
        Scenario::TheoremA => ProbeSpace::Hp(cfg.p),
        Scenario::TheoremB => ProbeSpace::Privalov(cfg.q),
        _ => ProbeSpace::Smirnov,
    }
}

fn space_name(space: ProbeSpace) -> String {
    match space {
        ProbeSpace::Hp(p) => format!("Hp({p})"),
        ProbeSpace::Privalov(q) => format!("Privalov({q})"),
        ProbeSpace::Smirnov => "Smirnov".into(),
    }
}

pub(super) fn run(cfg: &ScenarioConfig, report: &mut Report) -> Result<()> {
    let space = space(cfg);
    let order = cfg.resolution.order;
    let th = &cfg.thresholds;
    report.input("probe_space", space_name(space));
    report.input("dims", cfg.dims.clone());
    report.input("symbols", cfg.symbols.iter().map(|s| s.text.clone()).collect::<Vec<_>>());
    report.input("pairs", cfg.pairs.iter().map(|s| s.text.clone()).collect::<Vec<_>>());
    report.input("probe_radii", th.probe.radii);
    report.input("probe_angles", th.probe.angles);
    report.input("composed_iterations", th.multiplier.composed_iterations);
    report.tolerance("probe_bounded", th.probe.bounded_threshold);
    report.tolerance("probe_divergent", th.probe.divergent_threshold);
    report.tolerance("garsia", th.multiplier.garsia_threshold);
    report.tolerance("growth", th.multiplier.growth_threshold);
    report.tolerance("stable_rtol", th.multiplier.stable_rtol);
    report.tolerance("pair_tol", th.pair_tol);

    let symbols: Vec<FourierSeries> = cfg.symbols.iter().map(|s| s.spec.series(order)).collect::<Result<_>>()?;

    let mut pairs = Vec::new();
    for (i, spec) in cfg.pairs.iter().enumerate() {
        match spec.spec.pair(cfg.resolution, th.pair_tol) {
            Ok(pair) => {
                report.check(
                    format!("pair {i} builds"),
                    true,
                    format!("identity residual {:.3e}", pair.identity_residual),
                );
                pairs.push((i, pair));
            }
            Err(e) => report.check(format!("pair {i} builds"), false, format!("`{}`: {e}", spec.text)),
        }
    }

    let probes: Vec<Result<ContinuityProbeReport>> =
        par_map(&symbols, |m| hankel_continuity_probe(m, space, &cfg.dims, &th.probe).map_err(Into::into));
    let cells: Vec<(usize, usize)> = (0..symbols.len()).flat_map(|s| pairs.iter().map(move |(p, _)| (s, *p))).collect();
    let certs: Vec<Result<MultiplierReport>> = par_map(&cells, |&(s, p)| {
        let pair = &pairs.iter().find(|(i, _)| *i == p).expect("built pair").1;
        lotto_sarason_check(pair, &symbols[s], &cfg.dims, &th.multiplier).map_err(Into::into)
    });

    let mut probe_table = Table::new("probe", &["symbol", "dim", "norm"]);
    let mut cert_table = Table::new(
        "certification",
        &["symbol", "pair", "dim", "u_garsia", "mate_garsia", "preimage_residual", "composed_a", "composed_b"],
    );
    let mut cell_table = Table::new("cells", &["symbol", "pair", "probe", "certification"]);
    let mut verdicts = Table::new("verdicts", &["symbol", "probe", "growth_ratio", "intersection", "agree"]);

    let mut probe_verdicts = Vec::new();
    for (s, probe) in probes.into_iter().enumerate() {
        let probe = probe?;
        for (dim, norm) in probe.dims.iter().zip(&probe.norms) {
            probe_table.push(vec![s.into(), (*dim).into(), (*norm).into()]);
        }
        probe_verdicts.push((probe.verdict, probe.growth_ratio));
    }

    let mut cell_verdicts: Vec<Vec<Option<MultiplierVerdict>>> = vec![Vec::new(); symbols.len()];
    for (&(s, p), cert) in cells.iter().zip(certs) {
        let verdict = match cert {
            Ok(rep) => {
                for step in &rep.steps {
                    let norm = |n: Option<hardy_core::operators::NormEstimate>| n.map_or(f64::NAN, |e| e.value);
                    cert_table.push(vec![
                        s.into(),
                        p.into(),
                        step.dim.into(),
                        step.u_garsia.into(),
                        step.mate_garsia.into(),
                        step.preimage_residual.into(),
                        norm(step.composed_a).into(),
                        norm(step.composed_b).into(),
                    ]);
                }
                Some(rep.verdict)
            }
            Err(e) => {
                report.check(format!("cell ({s}, {p}) runs"), false, e.to_string());
                None
            }
        };
        cell_table.push(vec![
            s.into(),
            p.into(),
            format!("{:?}", probe_verdicts[s].0).into(),
            verdict.map_or("Error".to_string(), |v| format!("{v:?}")).into(),
        ]);
        cell_verdicts[s].push(verdict);
    }

    for (s, (probe, ratio)) in probe_verdicts.iter().enumerate() {
        let cells = &cell_verdicts[s];
        let complete = cells.len() == cfg.pairs.len() && cells.iter().all(Option::is_some);
        let intersection = if !complete {
            "Error"
        } else if cells.iter().all(|v| *v == Some(MultiplierVerdict::Multiplier)) {
            "Multiplier"
        } else {
            "NotCertified"
        };
        let agree = complete
            && matches!(
                (probe, intersection),
                (ProbeVerdict::Bounded, "Multiplier") | (ProbeVerdict::Divergent, "NotCertified")
            );
        verdicts.push(vec![s.into(), format!("{probe:?}").into(), (*ratio).into(), intersection.into(), agree.into()]);
        report.check(
            format!("symbol {s} equivalence"),
            agree,
            format!("`{}`: probe {probe:?} (ratio {ratio:.3e}), certification {intersection}", cfg.symbols[s].text),
        );
    }

    let classes = class_table(cfg, &symbols)?;
    report.tables.extend([probe_table, cert_table, cell_table, verdicts, classes]);
    Ok(())
}

/// Class diagnostics of the symbols; informational only.
fn class_table(cfg: &ScenarioConfig, symbols: &[FourierSeries]) -> Result<Table> {
    let mut t = Table::new("classes", &["symbol", "class", "value", "verdict"]);
    match cfg.scenario {
        Scenario::TheoremA => {
            let alpha = 1.0 / cfg.p;
            let grid = DiskGrid::dyadic(14, cfg.resolution.samples)?;
            for (s, m) in symbols.iter().enumerate() {
                let ladder = lipschitz_ladder(m, alpha, &grid)?;
                let sup = ladder.iter().copied().fold(0.0, f64::max);
                t.push(vec![s.into(), format!("Lipschitz({alpha})").into(), sup.into(), Value::Text("-".into())]);
            }
        }
        _ => {
            let alpha0 = if cfg.scenario == Scenario::TheoremB { 1.0 / (1.0 + cfg.q) } else { 0.5 };
            for (s, m) in symbols.iter().enumerate() {
                let rep = gevrey_membership(m, alpha0);
                t.push(vec![
                    s.into(),
                    format!("Gevrey({alpha0})").into(),
                    rep.margin.into(),
                    format!("{:?}", rep.verdict).into(),
                ]);
            }
        }
    }
    Ok(t)
}
