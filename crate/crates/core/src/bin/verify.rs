//! `verify`: runs the identity, fiber, series and counterexample suites and
//! writes a JSON report.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use cubic_dirac::verify::{run, write_report, write_traces, SuiteConfig, VerifyError};

#[derive(Parser, Debug)]
#[command(name = "verify", version, about = "Verify the cubic Dirac operator on SU(1,1)")]
struct Cli {
    /// Flat `key = value` configuration file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated subset of algebra, fibers, series, counterexample.
    #[arg(long)]
    suites: Option<String>,
    /// Comma-separated exponents q.
    #[arg(long)]
    q: Option<String>,
    /// Comma-separated rationals t of the Dirac family.
    #[arg(long)]
    t: Option<String>,
    /// Weight window `lo:hi` for fiber truncations.
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    /// Term budget for the series enclosures.
    #[arg(long)]
    budget: Option<String>,
    /// Comma-separated fiber samples, e.g. `principal:1:0,negative:-3`.
    #[arg(long, allow_hyphen_values = true)]
    fibers: Option<String>,
    /// Seed for the homomorphism samples.
    #[arg(long)]
    seed: Option<String>,
    /// JSON report path; the report goes to stdout when absent.
    #[arg(long)]
    out: Option<String>,
    /// CSV path for partial-sum traces.
    #[arg(long)]
    trace: Option<String>,
    /// Record the wall-clock runtime in the report metadata.
    #[arg(long)]
    timing: bool,
}

fn load(cli: &Cli) -> Result<SuiteConfig, VerifyError> {
    let mut cfg = SuiteConfig::default();
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path)
            .map_err(|source| VerifyError::Io { path: path.display().to_string(), source })?;
        cfg.apply_text(&text)?;
    }
    let overrides = [
        ("suites", &cli.suites),
        ("q", &cli.q),
        ("t", &cli.t),
        ("window", &cli.window),
        ("budget", &cli.budget),
        ("fibers", &cli.fibers),
        ("seed", &cli.seed),
        ("out", &cli.out),
        ("trace", &cli.trace),
    ];
    for (key, value) in overrides {
        if let Some(v) = value {
            cfg.set(key, v)?;
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

fn main_inner(cli: &Cli) -> Result<bool, VerifyError> {
    let cfg = load(cli)?;
    let start = Instant::now();
    let mut report = run(&cfg)?;
    if cli.timing {
        report.metadata.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    match &cfg.output_path {
        Some(p) => write_report(&report, p.as_ref())?,
        None => print!("{}", report.to_json()?),
    }
    if let Some(p) = &cfg.trace_path {
        write_traces(&cfg, p.as_ref())?;
    }
    eprintln!(
        "{} passed, {} failed, {} inconclusive",
        report.summary.passed, report.summary.failed, report.summary.inconclusive
    );
    Ok(report.success())
}

/// `0` when no check fails, `1` when one does, `2` on configuration or I/O errors.
fn exit_status(result: &Result<bool, VerifyError>) -> u8 {
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = main_inner(&cli);
    if let Err(e) = &result {
        eprintln!("error: {e}");
    }
    ExitCode::from(exit_status(&result))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("verify").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn flags_win_over_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        std::fs::write(&path, "suites = series\nq = 4\nbudget = 5000\nwindow = -3:3\n").unwrap();
        let c = load(&cli(&["--config", path.to_str().unwrap(), "--q", "3.5,4.5", "--window", "-7:2"])).unwrap();
        assert_eq!(c.q_values, vec![3.5, 4.5]);
        assert_eq!(c.window, (-7, 2));
        assert_eq!(c.term_budget, 5000);
        assert_eq!(c.echo().suites, vec!["series"]);
    }

    #[test]
    fn exit_status_contract() {
        let out = tempfile::tempdir().unwrap();
        let report = out.path().join("r.json");
        let ok = main_inner(&cli(&["--suites", "algebra", "--t", "1/3", "--out", report.to_str().unwrap()]));
        assert_eq!(exit_status(&ok), 0);
        let failing = main_inner(&cli(&["--suites", "series", "--q", "3.5", "--budget", "1000", "--out", report.to_str().unwrap()]));
        assert_eq!(exit_status(&failing), 1);
        let empty = main_inner(&cli(&["--suites=", "--out", report.to_str().unwrap()]));
        assert_eq!(exit_status(&empty), 0);
        assert_eq!(exit_status(&main_inner(&cli(&["--window", "4:1"]))), 2);
        assert_eq!(exit_status(&main_inner(&cli(&["--suites", "optics"]))), 2);
    }
}
