//! Named experiments. Each returns a [`Report`]; numerical failures inside
//! a scenario become failed checks, only config problems are errors.

mod linearity;
mod panel;
mod sanity;
mod stability;

use std::thread;

use crate::config::{Scenario, ScenarioConfig};
use crate::error::Result;
use crate::report::Report;

pub fn run_scenario(cfg: &ScenarioConfig) -> Result<Report> {
    cfg.validate()?;
    let mut report = Report::new(cfg.scenario.name());
    report.input("order", cfg.resolution.order);
    report.input("samples", cfg.resolution.samples);
    match cfg.scenario {
        Scenario::TheoremA | Scenario::TheoremB | Scenario::DavisMcCarthy => panel::run(cfg, &mut report)?,
        Scenario::Stability => stability::run(cfg, &mut report)?,
        Scenario::MateLinearity => linearity::run(cfg, &mut report)?,
        Scenario::Sanity => sanity::run(cfg, &mut report)?,
    }
    Ok(report)
}

/// Maps `f` over `items` on scoped threads, keeping input order.
fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let f = &f;
    thread::scope(|s| {
        let handles: Vec<_> = items.iter().map(|item| s.spawn(move || f(item))).collect();
        handles.into_iter().map(|h| h.join().expect("scenario worker panicked")).collect()
    })
}
