//! Desk-scale experiment runner on top of `hardy-core`.
//!
//! A run is driven by a [`ScenarioConfig`], produces a [`Report`], and the
//! report is serialized with [`emit_report`]. Reports are deterministic:
//! identical configs give byte-identical files.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod dsl;
pub mod error;
pub mod report;
pub mod scenarios;

pub use config::{Scenario, ScenarioConfig};
pub use dsl::{parse_function_spec, parse_pair_spec, FunctionSpec, Generator, PairSpec};
pub use error::{LabError, Result};
pub use report::{emit_report, Format, Report, Table, Value};
pub use scenarios::run_scenario;
