//! Check records and the JSON report.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::config::ConfigEcho;
use super::VerifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub status: Status,
    pub witness: Value,
    pub paper_anchor: String,
}

impl CheckRecord {
    pub fn new(check_id: impl Into<String>, status: Status, witness: Value, paper_anchor: &str) -> Self {
        Self { check_id: check_id.into(), status, witness, paper_anchor: paper_anchor.to_string() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub version: String,
    pub config: ConfigEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub metadata: Metadata,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(config: ConfigEcho, checks: Vec<CheckRecord>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Inconclusive => summary.inconclusive += 1,
            }
        }
        Self {
            metadata: Metadata { version: env!("CARGO_PKG_VERSION").to_string(), config, runtime_ms: None },
            summary,
            checks,
        }
    }

    pub fn success(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check_id == id)
    }

    pub fn to_json(&self) -> Result<String, VerifyError> {
        let mut s = serde_json::to_string_pretty(self).map_err(|e| VerifyError::Export(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self, VerifyError> {
        serde_json::from_str(s).map_err(|e| VerifyError::Export(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn echo() -> ConfigEcho {
        super::super::config::SuiteConfig::default().echo()
    }

    #[test]
    fn summary_counts() {
        let r = VerificationReport::new(
            echo(),
            vec![
                CheckRecord::new("a", Status::Pass, json!(0), "x"),
                CheckRecord::new("b", Status::Inconclusive, json!(null), "y"),
            ],
        );
        assert!(r.success());
        assert_eq!(r.summary, Summary { passed: 1, failed: 0, inconclusive: 1 });
    }

    #[test]
    fn json_round_trip() {
        let r = VerificationReport::new(
            echo(),
            vec![CheckRecord::new("a", Status::Fail, json!({"residual": 0.1 + 0.2, "m": -3}), "x")],
        );
        assert!(!r.success());
        let s = r.to_json().unwrap();
        assert!(!s.contains("runtime_ms"));
        assert_eq!(VerificationReport::from_json(&s).unwrap(), r);
    }
}
