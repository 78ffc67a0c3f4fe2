//! The verification harness: runs the configured suites and assembles a
//! deterministic report.

pub mod config;
pub mod report;
pub mod suites;

use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use thiserror::Error;

pub use config::{FiberSpec, Suite, SuiteConfig};
pub use report::{CheckRecord, Status, VerificationReport};

use crate::series::{partial_sum_trace, write_trace_csv, DIAGNOSTIC_BUDGETS, SHIFT_RESOLVENT};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("export failed: {0}")]
    Export(String),
}

fn run_suite(s: Suite, cfg: &SuiteConfig) -> Vec<CheckRecord> {
    match s {
        Suite::Algebra => suites::algebra_suite(cfg),
        Suite::Fibers => suites::fibers_suite(cfg),
        Suite::Series => suites::series_suite(cfg),
        Suite::Counterexample => suites::counterexample_suite(cfg),
    }
}

/// Runs the selected suites concurrently and concatenates their records in
/// the canonical suite order.
pub fn run(cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
    cfg.validate()?;
    let selected: Vec<Suite> = Suite::ALL.into_iter().filter(|s| cfg.includes(*s)).collect();
    let results: Vec<Vec<CheckRecord>> = std::thread::scope(|scope| {
        let handles: Vec<_> = selected.iter().map(|&s| scope.spawn(move || run_suite(s, cfg))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    Ok(VerificationReport::new(cfg.echo(), results.into_iter().flatten().collect()))
}

fn create(path: &Path) -> Result<BufWriter<File>, VerifyError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| VerifyError::Io { path: path.display().to_string(), source })
}

pub fn write_report(report: &VerificationReport, path: &Path) -> Result<(), VerifyError> {
    std::fs::write(path, report.to_json()?).map_err(|source| VerifyError::Io { path: path.display().to_string(), source })
}

/// Writes partial-sum traces of the three resolvent-trace series for every
/// configured `q` at the diagnostic budgets and the configured budget.
pub fn write_traces(cfg: &SuiteConfig, path: &Path) -> Result<(), VerifyError> {
    let mut budgets = DIAGNOSTIC_BUDGETS.to_vec();
    if !budgets.contains(&cfg.term_budget) {
        budgets.push(cfg.term_budget);
    }
    budgets.sort_unstable();
    let mut rows = Vec::new();
    for &q in &cfg.q_values {
        rows.extend(partial_sum_trace(q, SHIFT_RESOLVENT, &budgets).map_err(|e| VerifyError::Export(e.to_string()))?);
    }
    write_trace_csv(&rows, create(path)?).map_err(|e| VerifyError::Export(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_selection_is_vacuous_success() {
        let cfg = SuiteConfig { suites: vec![], ..Default::default() };
        let r = run(&cfg).unwrap();
        assert!(r.checks.is_empty());
        assert!(r.success());
    }

    #[test]
    fn algebra_suite_passes() {
        let cfg = SuiteConfig { suites: vec![Suite::Algebra], ..Default::default() };
        let r = run(&cfg).unwrap();
        assert!(r.success(), "{:#?}", r.checks.iter().filter(|c| c.status == Status::Fail).collect::<Vec<_>>());
        assert!(r.check("algebra.dirac_square").is_some());
        let printed = r.check("algebra.r_family.t=0").unwrap();
        assert_eq!(printed.witness["plus_sign_form_zero"], false);
        let at_cubic = r.check("algebra.r_family.t=1/3").unwrap();
        assert_eq!(at_cubic.witness["plus_sign_form_zero"], true);
        for t in ["0", "1/3", "1/2"] {
            let c = r.check(&format!("algebra.anticommutator_family.t={t}")).unwrap();
            assert_eq!(c.witness["equals_reference_times_minus_i_over_2"], true, "{t}");
        }
    }

    #[test]
    fn check_ids_are_unique() {
        let cfg = SuiteConfig {
            suites: vec![Suite::Algebra, Suite::Fibers, Suite::Counterexample],
            homomorphism_pairs: 10,
            window: (-8, 8),
            ..Default::default()
        };
        let r = run(&cfg).unwrap();
        let mut ids: Vec<&str> = r.checks.iter().map(|c| c.check_id.as_str()).collect();
        let n = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert!(r.success());
    }
}
