//! Scenario reports and their bit-stable JSON/CSV serialization.
//!
//! Floats are written as `{:.16e}` (17 significant digits); non-finite
//! values become the strings `"inf"`, `"-inf"` and `"nan"`. Maps are
//! emitted with sorted keys. Reports carry no wall time, so identical
//! configs give byte-identical files.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{LabError, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Num(f64),
    Text(String),
    List(Vec<Value>),
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v as i64)
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Num(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_owned())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Self {
        Value::List(v.into_iter().map(Into::into).collect())
    }
}

/// `{:.16e}`, or a name for non-finite values.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{x:.16e}")
    }
}

impl Value {
    /// Plain-text rendering used in CSV cells.
    pub fn to_cell(&self) -> String {
        match self {
            Value::Bool(b) => b.to_string(),
            Value::Int(i) => i.to_string(),
            Value::Num(x) => format_float(*x),
            Value::Text(s) => s.clone(),
            Value::List(v) => v.iter().map(Value::to_cell).collect::<Vec<_>>().join(";"),
        }
    }

    fn write_json(&self, out: &mut String) {
        match self {
            Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Value::Int(i) => out.push_str(&i.to_string()),
            Value::Num(x) if x.is_finite() => out.push_str(&format_float(*x)),
            Value::Num(x) => write_str(out, &format_float(*x)),
            Value::Text(s) => write_str(out, s),
            Value::List(v) => {
                out.push('[');
                for (i, item) in v.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write_json(out);
                }
                out.push(']');
            }
        }
    }
}

fn write_str(out: &mut String, s: &str) {
    out.push_str(&serde_json::to_string(s).expect("strings always serialize"));
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width in table {}", self.name);
        self.rows.push(row);
    }
}

/// One pass/fail assertion of a scenario.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub scenario: String,
    /// Config echo: every input that influenced a verdict.
    pub inputs: BTreeMap<String, Value>,
    pub tolerances: BTreeMap<String, f64>,
    pub tables: Vec<Table>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(scenario: &str) -> Self {
        Self { scenario: scenario.into(), ..Self::default() }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.into(), value.into());
    }

    pub fn tolerance(&mut self, key: &str, value: f64) {
        self.tolerances.insert(key.into(), value);
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push('{');
        out.push_str("\"checks\":[");
        for (i, c) in self.checks.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str("{\"detail\":");
            write_str(&mut out, &c.detail);
            out.push_str(",\"name\":");
            write_str(&mut out, &c.name);
            let _ = write!(out, ",\"passed\":{}}}", c.passed);
        }
        out.push_str("],\"inputs\":{");
        for (i, (k, v)) in self.inputs.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write_str(&mut out, k);
            out.push(':');
            v.write_json(&mut out);
        }
        out.push_str("},\"scenario\":");
        write_str(&mut out, &self.scenario);
        out.push_str(",\"tables\":{");
        let mut tables: Vec<&Table> = self.tables.iter().collect();
        tables.sort_by(|a, b| a.name.cmp(&b.name));
        for (i, t) in tables.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write_str(&mut out, &t.name);
            out.push_str(":{\"columns\":");
            Value::from(t.columns.clone()).write_json(&mut out);
            out.push_str(",\"rows\":");
            Value::List(t.rows.iter().map(|r| Value::List(r.clone())).collect()).write_json(&mut out);
            out.push('}');
        }
        out.push_str("},\"tolerances\":{");
        for (i, (k, v)) in self.tolerances.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write_str(&mut out, k);
            out.push(':');
            Value::Num(*v).write_json(&mut out);
        }
        out.push_str("},\"verdict\":");
        write_str(&mut out, self.verdict());
        out.push_str("}\n");
        out
    }

    /// The tables written by [`emit_report`] in CSV form: config echo,
    /// tolerances and checks first, then the scenario tables.
    pub fn csv_tables(&self) -> Vec<Table> {
        let mut inputs = Table::new("inputs", &["key", "value"]);
        for (k, v) in &self.inputs {
            inputs.push(vec![k.as_str().into(), v.to_cell().into()]);
        }
        let mut tolerances = Table::new("tolerances", &["key", "value"]);
        for (k, v) in &self.tolerances {
            tolerances.push(vec![k.as_str().into(), (*v).into()]);
        }
        let mut checks = Table::new("checks", &["name", "passed", "detail"]);
        for c in &self.checks {
            checks.push(vec![c.name.as_str().into(), c.passed.into(), c.detail.as_str().into()]);
        }
        let mut out = vec![inputs, tolerances, checks];
        out.extend(self.tables.iter().cloned());
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(LabError::Config(format!("unknown format `{other}`, expected json or csv"))),
        }
    }
}

/// Writes `report` under `dir`, returning the files created. JSON goes to
/// `<scenario>.json`; CSV writes `<scenario>-<table>.csv` per table plus
/// `<scenario>-manifest.csv`.
pub fn emit_report(report: &Report, format: Format, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let stem = if report.scenario.is_empty() { "report" } else { report.scenario.as_str() };
    match format {
        Format::Json => {
            let path = dir.join(format!("{stem}.json"));
            fs::write(&path, report.to_json())?;
            Ok(vec![path])
        }
        Format::Csv => {
            let mut files = Vec::new();
            let manifest_path = dir.join(format!("{stem}-manifest.csv"));
            let mut manifest = csv::Writer::from_path(&manifest_path)?;
            manifest.write_record(["table", "file", "rows", "columns", "verdict"])?;
            for table in report.csv_tables() {
                let name = format!("{stem}-{}.csv", table.name);
                let path = dir.join(&name);
                let mut w = csv::Writer::from_path(&path)?;
                w.write_record(&table.columns)?;
                for row in &table.rows {
                    w.write_record(row.iter().map(Value::to_cell))?;
                }
                w.flush()?;
                manifest.write_record([
                    table.name.as_str(),
                    name.as_str(),
                    &table.rows.len().to_string(),
                    &table.columns.len().to_string(),
                    report.verdict(),
                ])?;
                files.push(path);
            }
            manifest.flush()?;
            files.push(manifest_path);
            Ok(files)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_have_seventeen_digits() {
        assert_eq!(format_float(0.1), "1.0000000000000001e-1");
        assert_eq!(format_float(-2.0), "-2.0000000000000000e0");
        assert_eq!(format_float(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn json_is_valid_and_sorted() {
        let mut r = Report::new("x");
        r.input("zeta", 1usize);
        r.input("alpha", vec![0.5, f64::NAN]);
        r.tolerance("t", 1e-6);
        let mut t = Table::new("rows", &["a"]);
        t.push(vec![f64::INFINITY.into()]);
        r.tables.push(t);
        r.check("c", false, "why \"quoted\"");
        let text = r.to_json();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed["verdict"], "FAIL");
        assert_eq!(parsed["inputs"]["alpha"][1], "nan");
        assert_eq!(parsed["tables"]["rows"]["rows"][0][0], "inf");
        assert!(text.find("alpha").unwrap() < text.find("zeta").unwrap());
    }
}
