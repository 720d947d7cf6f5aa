use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use hardylab::{emit_report, run_scenario, Format, LabError, Report, Scenario, ScenarioConfig};

#[derive(Parser)]
#[command(name = "hardylab", version, about = "Run Hardy-space desk experiments and write deterministic reports")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the scenario described by a config file
    Run {
        config: PathBuf,
        /// Override the scenario named in the config
        #[arg(long)]
        scenario: Option<String>,
        /// Output directory; defaults to the config's [output] dir
        #[arg(long)]
        out: Option<PathBuf>,
        /// json or csv
        #[arg(long)]
        format: Option<String>,
    },
    /// Run the invariant suite at defaults
    Check {
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        format: Option<String>,
    },
}

/// Exit status: 0 all checks pass, 1 some check fails, 2 config or I/O error.
fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("hardylab: {e}");
            ExitCode::from(2)
        }
    }
}

fn execute(command: Command) -> Result<bool, LabError> {
    let (cfg, out, format) = match command {
        Command::Run { config, scenario, out, format } => {
            let scenario = scenario.map(|s| s.parse::<Scenario>()).transpose()?;
            (ScenarioConfig::load(&config, scenario)?, out, format)
        }
        Command::Check { out, format } => (ScenarioConfig::defaults(Scenario::Sanity), out, format),
    };
    let format = match format {
        Some(f) => f.parse::<Format>()?,
        None => cfg.format,
    };
    let start = Instant::now();
    let report = run_scenario(&cfg)?;
    print_summary(&report);
    if let Some(dir) = out.or_else(|| cfg.out_dir.clone()) {
        for path in emit_report(&report, format, &dir)? {
            println!("wrote {}", path.display());
        }
    }
    // Timing stays out of the report to keep it reproducible.
    eprintln!("{} finished in {:.2?}", report.scenario, start.elapsed());
    Ok(report.passed())
}

fn print_summary(report: &Report) {
    for c in &report.checks {
        println!("[{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    println!("{}: {}", report.scenario, report.verdict());
}
