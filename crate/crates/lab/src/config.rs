//! Scenario configuration: a TOML file of flat `key = value` sections.
//!
//! ```toml
//! scenario = "theorem-a"
//!
//! [resolution]
//! order = 2048
//! samples = 16384
//!
//! [ladder]
//! dims = [64, 256, 1024]
//!
//! [panel]
//! p = 1.0
//! symbols = ["generator: powerlaw s=2.2", "generator: powerlaw s=1.1"]
//! pairs = ["b => rational: num=[1,1] den=[2]", "b => coefficients: [0.6]"]
//!
//! [output]
//! dir = "out"
//! format = "json"
//! ```
//!
//! Every key is optional; missing keys take the defaults of the scenario.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use hardy_core::hb_space::MultiplierConfig;
use hardy_core::operators::ProbeConfig;
use hardy_core::Resolution;
use serde::Deserialize;

use crate::dsl::{parse_function_spec, parse_pair_spec, FunctionSpec, PairSpec};
use crate::error::{LabError, Result};
use crate::report::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scenario {
    TheoremA,
    TheoremB,
    DavisMcCarthy,
    Stability,
    MateLinearity,
    Sanity,
}

impl Scenario {
    pub const ALL: [Scenario; 6] = [
        Scenario::TheoremA,
        Scenario::TheoremB,
        Scenario::DavisMcCarthy,
        Scenario::Stability,
        Scenario::MateLinearity,
        Scenario::Sanity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::TheoremA => "theorem-a",
            Scenario::TheoremB => "theorem-b",
            Scenario::DavisMcCarthy => "davis-mccarthy",
            Scenario::Stability => "stability",
            Scenario::MateLinearity => "mate-linearity",
            Scenario::Sanity => "sanity",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        Scenario::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| LabError::Config(format!("unknown scenario `{s}`")))
    }
}

/// A function spec with the text it was parsed from.
#[derive(Clone, Debug, PartialEq)]
pub struct Spec<T> {
    pub text: String,
    pub spec: T,
}

impl Spec<FunctionSpec> {
    pub fn parse(text: &str) -> Result<Self> {
        let spec = parse_function_spec(text).map_err(|e| LabError::Config(format!("spec `{text}`: {e}")))?;
        Ok(Self { text: text.into(), spec })
    }
}

impl Spec<PairSpec> {
    pub fn parse(text: &str) -> Result<Self> {
        let spec = parse_pair_spec(text).map_err(|e| LabError::Config(format!("pair `{text}`: {e}")))?;
        Ok(Self { text: text.into(), spec })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Thresholds {
    pub probe: ProbeConfig,
    pub multiplier: MultiplierConfig,
    /// Pythagorean identity tolerance when building pairs.
    pub pair_tol: f64,
    /// Bound on the last `|a_n - a|` of the stability table.
    pub stability_a_error: f64,
    pub linearity: f64,
    /// Tolerance of the sanity invariants.
    pub invariant: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Self {
            probe: ProbeConfig::default(),
            multiplier: MultiplierConfig { composed_iterations: 100, ..MultiplierConfig::default() },
            pair_tol: 1e-6,
            stability_a_error: 1e-2,
            linearity: 1e-6,
            invariant: 1e-12,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilitySettings {
    pub h: Spec<FunctionSpec>,
    /// Perturbation degrees `n` of `p_n = zⁿ/n`.
    pub perturbations: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearitySettings {
    pub h1: Spec<FunctionSpec>,
    pub h2: Spec<FunctionSpec>,
    pub lambda: f64,
    pub m: Spec<FunctionSpec>,
    pub dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SanitySettings {
    pub seed: u64,
    pub trials: usize,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    pub resolution: Resolution,
    pub dims: Vec<usize>,
    /// `H^p` exponent of the theorem-a probe.
    pub p: f64,
    /// Privalov exponent of the theorem-b probe.
    pub q: f64,
    pub symbols: Vec<Spec<FunctionSpec>>,
    pub pairs: Vec<Spec<PairSpec>>,
    pub stability: StabilitySettings,
    pub linearity: LinearitySettings,
    pub sanity: SanitySettings,
    pub thresholds: Thresholds,
    pub out_dir: Option<PathBuf>,
    pub format: Format,
}

fn specs(texts: &[&str]) -> Vec<Spec<FunctionSpec>> {
    texts.iter().map(|t| Spec::<FunctionSpec>::parse(t).expect("built-in spec")).collect()
}

fn pairs(texts: &[&str]) -> Vec<Spec<PairSpec>> {
    texts.iter().map(|t| Spec::<PairSpec>::parse(t).expect("built-in pair")).collect()
}

impl ScenarioConfig {
    /// Built-in defaults of `scenario`.
    pub fn defaults(scenario: Scenario) -> Self {
        let (symbols, pair_panel) = match scenario {
            Scenario::TheoremB | Scenario::DavisMcCarthy => (
                specs(&["generator: gevrey c=2 alpha=0.5", "generator: powerlaw s=2"]),
                pairs(&["h => quotient: num=[1,1] den=[1,-1]", "a => generator: outerpower base=[0.5,-0.5] theta=3"]),
            ),
            _ => (
                specs(&["generator: powerlaw s=2.2", "generator: powerlaw s=1.1"]),
                pairs(&["b => rational: num=[1,1] den=[2]", "b => coefficients: [0.6]"]),
            ),
        };
        Self {
            scenario,
            resolution: Resolution::default(),
            dims: vec![64, 256, 1024],
            p: 1.0,
            q: 2.0,
            symbols,
            pairs: pair_panel,
            stability: StabilitySettings {
                h: Spec::<FunctionSpec>::parse("quotient: num=[1,1] den=[1,-1]").expect("built-in spec"),
                perturbations: vec![4, 16, 64, 256, 512],
            },
            linearity: LinearitySettings {
                h1: Spec::<FunctionSpec>::parse("quotient: num=[1,1] den=[1,-1]").expect("built-in spec"),
                h2: Spec::<FunctionSpec>::parse("coefficients: [1]").expect("built-in spec"),
                lambda: 2.0,
                m: Spec::<FunctionSpec>::parse("coefficients: [0, 1]").expect("built-in spec"),
                dim: 256,
            },
            sanity: SanitySettings { seed: 0x5eed_2024, trials: 16, degree: 12 },
            thresholds: Thresholds::default(),
            out_dir: None,
            format: Format::Json,
        }
    }

    /// Reads a config file; `scenario` overrides the file's own choice.
    pub fn load(path: &Path, scenario: Option<Scenario>) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|source| LabError::ConfigFile { path: path.into(), source })?;
        let mut cfg = Self::from_toml(&text, scenario)?;
        if let Some(dir) = &cfg.out_dir {
            if dir.is_relative() {
                cfg.out_dir = Some(path.parent().unwrap_or(Path::new(".")).join(dir));
            }
        }
        Ok(cfg)
    }

    pub fn from_toml(text: &str, scenario: Option<Scenario>) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text)?;
        let scenario = match (scenario, &raw.scenario) {
            (Some(s), _) => s,
            (None, Some(name)) => name.parse()?,
            (None, None) => return Err(LabError::Config("no scenario given".into())),
        };
        let mut cfg = Self::defaults(scenario);
        raw.apply(&mut cfg)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(LabError::Config(msg));
        let Resolution { order, samples } = self.resolution;
        if self.resolution.validate().is_err() {
            return bad(format!(
                "samples = {samples} must be a power of two and at least 2·order + 1 = {}",
                2 * order + 1
            ));
        }
        if self.dims.is_empty() || self.dims[0] == 0 || self.dims.windows(2).any(|w| w[1] <= w[0]) {
            return bad(format!("dims {:?} must be positive and increasing", self.dims));
        }
        if *self.dims.last().expect("non-empty") > order {
            return bad(format!("largest dim exceeds order = {order}"));
        }
        if !(self.p > 0.0) || !(self.q >= 1.0) {
            return bad("need p > 0 and q ≥ 1".into());
        }
        let t = &self.thresholds;
        let positive = [
            t.probe.bounded_threshold,
            t.probe.divergent_threshold,
            t.multiplier.garsia_threshold,
            t.multiplier.growth_threshold,
            t.multiplier.stable_rtol,
            t.pair_tol,
            t.stability_a_error,
            t.linearity,
            t.invariant,
        ];
        if positive.iter().any(|v| !(*v > 0.0)) || t.probe.bounded_threshold > t.probe.divergent_threshold {
            return bad("thresholds must be positive with probe_bounded ≤ probe_divergent".into());
        }
        if self.stability.perturbations.is_empty() || self.stability.perturbations.windows(2).any(|w| w[1] <= w[0]) {
            return bad("stability perturbations must be increasing".into());
        }
        if self.stability.perturbations.iter().any(|&n| n == 0 || n > order) {
            return bad(format!("stability perturbations must lie in 1..={order}"));
        }
        if self.linearity.dim == 0 || self.linearity.dim > order {
            return bad(format!("linearity dim must lie in 1..={order}"));
        }
        if self.sanity.trials == 0 || self.sanity.degree == 0 {
            return bad("sanity trials and degree must be positive".into());
        }
        for s in
            self.symbols.iter().chain([&self.stability.h, &self.linearity.h1, &self.linearity.h2, &self.linearity.m])
        {
            s.spec.validate(samples).map_err(|e| LabError::Config(format!("spec `{}`: {e}", s.text)))?;
        }
        for p in &self.pairs {
            p.spec.validate(samples).map_err(|e| LabError::Config(format!("pair `{}`: {e}", p.text)))?;
        }
        Ok(())
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    scenario: Option<String>,
    resolution: Option<RawResolution>,
    ladder: Option<RawLadder>,
    panel: Option<RawPanel>,
    stability: Option<RawStability>,
    linearity: Option<RawLinearity>,
    sanity: Option<RawSanity>,
    thresholds: Option<RawThresholds>,
    output: Option<RawOutput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawResolution {
    order: Option<usize>,
    samples: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLadder {
    dims: Option<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPanel {
    p: Option<f64>,
    q: Option<f64>,
    symbols: Option<Vec<String>>,
    pairs: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStability {
    h: Option<String>,
    perturbations: Option<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLinearity {
    h1: Option<String>,
    h2: Option<String>,
    lambda: Option<f64>,
    m: Option<String>,
    dim: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSanity {
    seed: Option<u64>,
    trials: Option<usize>,
    degree: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawThresholds {
    probe_bounded: Option<f64>,
    probe_divergent: Option<f64>,
    probe_radii: Option<usize>,
    probe_angles: Option<usize>,
    garsia: Option<f64>,
    growth: Option<f64>,
    stable_rtol: Option<f64>,
    composed_iterations: Option<usize>,
    pair_tol: Option<f64>,
    stability_a_error: Option<f64>,
    linearity: Option<f64>,
    invariant: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    dir: Option<PathBuf>,
    format: Option<String>,
}

fn set<T>(slot: &mut T, value: Option<T>) {
    if let Some(v) = value {
        *slot = v;
    }
}

fn parse_specs(texts: Option<Vec<String>>) -> Result<Option<Vec<Spec<FunctionSpec>>>> {
    texts.map(|v| v.iter().map(|t| Spec::<FunctionSpec>::parse(t)).collect()).transpose()
}

fn parse_spec(text: Option<String>) -> Result<Option<Spec<FunctionSpec>>> {
    text.map(|t| Spec::<FunctionSpec>::parse(&t)).transpose()
}

impl RawConfig {
    fn apply(self, cfg: &mut ScenarioConfig) -> Result<()> {
        if let Some(r) = self.resolution {
            set(&mut cfg.resolution.order, r.order);
            set(&mut cfg.resolution.samples, r.samples);
        }
        if let Some(l) = self.ladder {
            set(&mut cfg.dims, l.dims);
        }
        if let Some(p) = self.panel {
            set(&mut cfg.p, p.p);
            set(&mut cfg.q, p.q);
            set(&mut cfg.symbols, parse_specs(p.symbols)?);
            let pairs = p
                .pairs
                .map(|v| v.iter().map(|t| Spec::<PairSpec>::parse(t)).collect::<Result<Vec<_>>>())
                .transpose()?;
            set(&mut cfg.pairs, pairs);
        }
        if let Some(s) = self.stability {
            set(&mut cfg.stability.h, parse_spec(s.h)?);
            set(&mut cfg.stability.perturbations, s.perturbations);
        }
        if let Some(l) = self.linearity {
            set(&mut cfg.linearity.h1, parse_spec(l.h1)?);
            set(&mut cfg.linearity.h2, parse_spec(l.h2)?);
            set(&mut cfg.linearity.m, parse_spec(l.m)?);
            set(&mut cfg.linearity.lambda, l.lambda);
            set(&mut cfg.linearity.dim, l.dim);
        }
        if let Some(s) = self.sanity {
            set(&mut cfg.sanity.seed, s.seed);
            set(&mut cfg.sanity.trials, s.trials);
            set(&mut cfg.sanity.degree, s.degree);
        }
        if let Some(t) = self.thresholds {
            let th = &mut cfg.thresholds;
            set(&mut th.probe.bounded_threshold, t.probe_bounded);
            set(&mut th.probe.divergent_threshold, t.probe_divergent);
            set(&mut th.probe.radii, t.probe_radii);
            set(&mut th.probe.angles, t.probe_angles);
            set(&mut th.multiplier.garsia_threshold, t.garsia);
            set(&mut th.multiplier.growth_threshold, t.growth);
            set(&mut th.multiplier.stable_rtol, t.stable_rtol);
            set(&mut th.multiplier.composed_iterations, t.composed_iterations);
            set(&mut th.pair_tol, t.pair_tol);
            set(&mut th.stability_a_error, t.stability_a_error);
            set(&mut th.linearity, t.linearity);
            set(&mut th.invariant, t.invariant);
        }
        if let Some(o) = self.output {
            cfg.out_dir = o.dir.or(cfg.out_dir.take());
            set(&mut cfg.format, o.format.map(|f| f.parse()).transpose()?);
        }
        Ok(())
    }
}
