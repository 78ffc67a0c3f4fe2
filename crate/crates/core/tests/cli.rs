use std::path::Path;
use std::process::{Command, Output};

use cubic_dirac::verify::{Status, VerificationReport};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("run verify")
}

fn read_report(path: &Path) -> VerificationReport {
    VerificationReport::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn empty_selection_succeeds_with_no_checks() {
    let out = verify(&["--suites="]);
    assert_eq!(out.status.code(), Some(0));
    let r = VerificationReport::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert!(r.checks.is_empty());
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "suites = algebra, fibers\nt = 0\nwindow = -3:3\n").unwrap();
    let report = dir.path().join("r.json");
    let out = verify(&[
        "--config",
        cfg.to_str().unwrap(),
        "--suites",
        "algebra",
        "--t",
        "1/2",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = read_report(&report);
    assert_eq!(r.metadata.config.suites, vec!["algebra"]);
    assert_eq!(r.metadata.config.t_values, vec!["1/2"]);
    assert_eq!(r.metadata.config.window, [-3, 3]);
    assert!(r.check("algebra.langle_family.t=1/2").is_some());
    assert!(r.check("algebra.langle_family.t=0").is_none());
    assert!(r.checks.iter().all(|c| c.check_id.starts_with("algebra.")));
}

#[test]
fn series_suite_reports_three_enclosures_and_sum() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let trace = dir.path().join("t.csv");
    let out = verify(&[
        "--suites",
        "series",
        "--q",
        "4.0",
        "--out",
        report.to_str().unwrap(),
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = read_report(&report);
    let parts: Vec<(f64, f64)> = ["s_pos_plus", "s_neg_plus", "s_chi_plus"]
        .iter()
        .map(|n| {
            let c = r.check(&format!("series.enclosure.q=4.{n}")).unwrap();
            assert_eq!(c.status, Status::Pass);
            (c.witness["lower"].as_f64().unwrap(), c.witness["upper"].as_f64().unwrap())
        })
        .collect();
    let total = r.check("series.resolvent_trace.q=4").unwrap();
    let (lo, hi) = (total.witness["lower"].as_f64().unwrap(), total.witness["upper"].as_f64().unwrap());
    let sum_lo: f64 = parts.iter().map(|p| p.0).sum();
    let sum_hi: f64 = parts.iter().map(|p| p.1).sum();
    assert!((lo - sum_lo).abs() < 1e-12 && (hi - sum_hi).abs() < 1e-12);

    let mut rdr = csv::Reader::from_path(&trace).unwrap();
    let rows: Vec<(String, f64, u64, f64)> = rdr.deserialize().map(|r| r.unwrap()).collect();
    for name in ["S+_+", "S-_+", "Schi_+"] {
        let col: Vec<f64> = rows.iter().filter(|r| r.0 == name).map(|r| r.3).collect();
        assert_eq!(col.len(), 4);
        assert!(col.windows(2).all(|w| w[1] >= w[0]), "{name}: {col:?}");
    }
}

#[test]
fn counterexample_suite_reports_exponents() {
    let out = verify(&["--suites", "counterexample"]);
    assert_eq!(out.status.code(), Some(0));
    let r = VerificationReport::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let c = r.check("counterexample.scaling").unwrap();
    let rows = c.witness["candidates"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().any(|row| (row["num_exponent"].as_f64().unwrap() - 4.0).abs() < 0.1
        && (row["den_exponent"].as_f64().unwrap() - 2.0).abs() < 0.1));
}

#[test]
fn failing_check_sets_exit_code() {
    // Too small a budget for the 1e-6 relative width at q = 3.5.
    let out = verify(&["--suites", "series", "--q", "3.5", "--budget", "1000"]);
    assert_eq!(out.status.code(), Some(1));
    let r = VerificationReport::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let failed: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Fail).collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| !c.witness.is_null()));
}

#[test]
fn diagnostic_runs_are_inconclusive() {
    let out = verify(&["--suites", "series", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = VerificationReport::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let c = r.check("series.divergence.q=3").unwrap();
    assert_eq!(c.status, Status::Inconclusive);
    assert_eq!(c.witness["stabilizing"], false);
}

#[test]
fn config_errors_exit_with_two() {
    assert_eq!(verify(&["--window", "5:-5"]).status.code(), Some(2));
    assert_eq!(verify(&["--suites", "geometry"]).status.code(), Some(2));
    assert_eq!(verify(&["--config", "/nonexistent/verify.cfg"]).status.code(), Some(2));
}

#[test]
fn timing_is_opt_in() {
    let plain = verify(&["--suites", "algebra", "--t", "1/3"]);
    assert!(!String::from_utf8_lossy(&plain.stdout).contains("runtime_ms"));
    let timed = verify(&["--suites", "algebra", "--t", "1/3", "--timing"]);
    let r = VerificationReport::from_json(std::str::from_utf8(&timed.stdout).unwrap()).unwrap();
    assert!(r.metadata.runtime_ms.is_some());
}
