//! Suite configuration: defaults, a flat `key = value` file format and
//! overrides from the command line.
//!
//! ```text
//! # comments start with '#'
//! suites = algebra, fibers
//! t = 0, 1/3, 1/2
//! q = 4, 3.5
//! window = -50:50
//! budget = 1000000
//! fibers = principal:1:0, principal:0.5:1/2, negative:-3, positive:-4
//! out = report.json
//! trace = traces.csv
//! seed = 7
//! ```
//!
//! Discrete fibers are written with `2l`, so `negative:-3` is `l = −3/2`.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::fibers::{DiscreteSign, FiberLabel, Parity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Algebra,
    Fibers,
    Series,
    Counterexample,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Algebra, Suite::Fibers, Suite::Series, Suite::Counterexample];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Fibers => "fibers",
            Suite::Series => "series",
            Suite::Counterexample => "counterexample",
        }
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| VerifyError::Config(format!("unknown suite '{s}'")))
    }
}

/// A fiber sample in the config syntax `principal:ρ:ε`, `negative:2l`, `positive:2l`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiberSpec(pub FiberLabel);

impl fmt::Display for FiberSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            FiberLabel::Principal { rho, eps } => {
                let e = match eps {
                    Parity::Zero => "0",
                    Parity::Half => "1/2",
                };
                write!(f, "principal:{rho}:{e}")
            }
            FiberLabel::Discrete { sign: DiscreteSign::Negative, two_l } => write!(f, "negative:{two_l}"),
            FiberLabel::Discrete { sign: DiscreteSign::Positive, two_l } => write!(f, "positive:{two_l}"),
        }
    }
}

impl FromStr for FiberSpec {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: String| VerifyError::Config(format!("fiber '{s}': {why}"));
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let label = match parts.as_slice() {
            ["principal", rho, eps] => {
                let rho: f64 = rho.parse().map_err(|e| bad(format!("{e}")))?;
                let eps = match *eps {
                    "0" => Parity::Zero,
                    "1/2" | "0.5" => Parity::Half,
                    other => return Err(bad(format!("parity '{other}' is not 0 or 1/2"))),
                };
                FiberLabel::principal(rho, eps)
            }
            [family @ ("negative" | "positive"), two_l] => {
                let two_l: i64 = two_l.parse().map_err(|e| bad(format!("{e}")))?;
                let sign = if *family == "negative" { DiscreteSign::Negative } else { DiscreteSign::Positive };
                FiberLabel::discrete(sign, two_l)
            }
            _ => return Err(bad("expected principal:rho:eps or negative:2l / positive:2l".into())),
        };
        label.map(FiberSpec).map_err(|e| bad(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub suites: Vec<Suite>,
    pub t_values: Vec<Rational64>,
    pub fiber_samples: Vec<FiberLabel>,
    pub window: (i64, i64),
    pub q_values: Vec<f64>,
    pub term_budget: u64,
    pub output_path: Option<String>,
    pub trace_path: Option<String>,
    pub seed: u64,
    pub homomorphism_pairs: usize,
}

pub fn default_fiber_samples() -> Vec<FiberLabel> {
    let mut out = Vec::new();
    for rho in [0.0, 1.0, 5.0] {
        for eps in [Parity::Zero, Parity::Half] {
            out.push(FiberLabel::Principal { rho, eps });
        }
    }
    for two_l in -5..=-1 {
        out.push(FiberLabel::negative(two_l));
        out.push(FiberLabel::positive(two_l));
    }
    out
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            suites: Suite::ALL.to_vec(),
            t_values: vec![Rational64::new(0, 1), Rational64::new(1, 3), Rational64::new(1, 2)],
            fiber_samples: default_fiber_samples(),
            window: (-50, 50),
            q_values: vec![4.0, 3.5, 3.0, 2.0],
            term_budget: 1_000_000,
            output_path: None,
            trace_path: None,
            seed: 0x5eed,
            homomorphism_pairs: 200,
        }
    }
}

fn list<T: FromStr>(v: &str) -> Result<Vec<T>, VerifyError>
where
    T::Err: fmt::Display,
{
    v.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<T>().map_err(|e| VerifyError::Config(format!("'{s}': {e}"))))
        .collect()
}

fn parse_window(v: &str) -> Result<(i64, i64), VerifyError> {
    let (a, b) = v
        .rsplit_once(':')
        .ok_or_else(|| VerifyError::Config(format!("window '{v}' must look like lo:hi")))?;
    let p = |s: &str| s.trim().parse::<i64>().map_err(|e| VerifyError::Config(format!("window '{v}': {e}")));
    Ok((p(a)?, p(b)?))
}

impl SuiteConfig {
    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), VerifyError> {
        let v = value.trim();
        match key.trim() {
            "suites" => self.suites = list(v)?,
            "t" => self.t_values = list(v)?,
            "q" => self.q_values = list(v)?,
            "window" => self.window = parse_window(v)?,
            "budget" => {
                self.term_budget = v.parse().map_err(|e| VerifyError::Config(format!("budget '{v}': {e}")))?
            }
            "fibers" => self.fiber_samples = list::<FiberSpec>(v)?.into_iter().map(|f| f.0).collect(),
            "out" => self.output_path = Some(v.to_string()),
            "trace" => self.trace_path = Some(v.to_string()),
            "seed" => self.seed = v.parse().map_err(|e| VerifyError::Config(format!("seed '{v}': {e}")))?,
            "pairs" => {
                self.homomorphism_pairs = v.parse().map_err(|e| VerifyError::Config(format!("pairs '{v}': {e}")))?
            }
            other => return Err(VerifyError::Config(format!("unknown key '{other}'"))),
        }
        Ok(())
    }

    /// Applies every setting of a flat `key = value` text.
    pub fn apply_text(&mut self, text: &str) -> Result<(), VerifyError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| VerifyError::Config(format!("line {}: expected key = value", n + 1)))?;
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn from_text(text: &str) -> Result<Self, VerifyError> {
        let mut c = Self::default();
        c.apply_text(text)?;
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.window.0 > self.window.1 {
            return Err(VerifyError::Config(format!("empty window {}:{}", self.window.0, self.window.1)));
        }
        if self.term_budget < 1_000 {
            return Err(VerifyError::Config(format!("budget {} is below 1000", self.term_budget)));
        }
        if let Some(q) = self.q_values.iter().find(|q| !(**q > 0.0)) {
            return Err(VerifyError::Config(format!("q = {q} must be positive")));
        }
        Ok(())
    }

    pub fn includes(&self, s: Suite) -> bool {
        self.suites.contains(&s)
    }

    pub fn echo(&self) -> ConfigEcho {
        let mut suites = self.suites.clone();
        suites.sort();
        suites.dedup();
        ConfigEcho {
            suites: suites.iter().map(|s| s.name().to_string()).collect(),
            t_values: self.t_values.iter().map(|t| t.to_string()).collect(),
            fiber_samples: self.fiber_samples.iter().map(|f| FiberSpec(*f).to_string()).collect(),
            window: [self.window.0, self.window.1],
            q_values: self.q_values.clone(),
            term_budget: self.term_budget,
            seed: self.seed,
            homomorphism_pairs: self.homomorphism_pairs,
        }
    }
}

/// The configuration as recorded in a report. Output paths are left out so
/// that reports do not depend on where they are written.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub suites: Vec<String>,
    pub t_values: Vec<String>,
    pub fiber_samples: Vec<String>,
    pub window: [i64; 2],
    pub q_values: Vec<f64>,
    pub term_budget: u64,
    pub seed: u64,
    pub homomorphism_pairs: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_file() {
        let c = SuiteConfig::from_text(
            "# sample\nsuites = series, algebra\nq = 4\nt = 1/3\nwindow = -10:12\nbudget=5000\nfibers = principal:1:1/2, negative:-3\n",
        )
        .unwrap();
        assert_eq!(c.suites, vec![Suite::Series, Suite::Algebra]);
        assert_eq!(c.q_values, vec![4.0]);
        assert_eq!(c.t_values, vec![Rational64::new(1, 3)]);
        assert_eq!(c.window, (-10, 12));
        assert_eq!(c.term_budget, 5000);
        assert_eq!(c.fiber_samples[0], FiberLabel::Principal { rho: 1.0, eps: Parity::Half });
        assert_eq!(c.fiber_samples[1], FiberLabel::negative(-3));
    }

    #[test]
    fn rejects_bad_values() {
        assert!(SuiteConfig::from_text("window = 3:1").is_err());
        assert!(SuiteConfig::from_text("budget = 10").is_err());
        assert!(SuiteConfig::from_text("q = 0").is_err());
        assert!(SuiteConfig::from_text("colour = red").is_err());
        assert!(SuiteConfig::from_text("suites = algebra, topology").is_err());
        assert!(SuiteConfig::from_text("fibers = negative:0").is_err());
        assert!(SuiteConfig::from_text("just a line").is_err());
    }

    #[test]
    fn fiber_specs_round_trip() {
        for f in default_fiber_samples() {
            let s = FiberSpec(f).to_string();
            assert_eq!(s.parse::<FiberSpec>().unwrap().0, f, "{s}");
        }
    }

    #[test]
    fn empty_suites_allowed() {
        let c = SuiteConfig::from_text("suites =").unwrap();
        assert!(c.suites.is_empty());
    }
}
