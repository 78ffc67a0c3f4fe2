//! Partial-sum growth across geometric term budgets.
//!
//! A series is reported as non-stabilizing when the last increment is at
//! least [`STABILITY_RATIO`] times the previous one. This is evidence, not a
//! proof, of divergence.

use serde::{Deserialize, Serialize};

use super::SeriesError;

pub const DIAGNOSTIC_BUDGETS: [u64; 3] = [1_000, 10_000, 100_000];
pub const STABILITY_RATIO: f64 = 0.9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DivergenceReport {
    pub q: f64,
    pub budgets: Vec<u64>,
    pub partial_sums: Vec<f64>,
    pub increment_ratio: f64,
    pub stabilizing: bool,
}

impl DivergenceReport {
    pub fn from_partial_sums(q: f64, budgets: &[u64], partial_sums: Vec<f64>) -> Self {
        let n = partial_sums.len();
        let ratio = if n >= 3 {
            let d1 = partial_sums[n - 2] - partial_sums[n - 3];
            let d2 = partial_sums[n - 1] - partial_sums[n - 2];
            d2 / d1
        } else {
            f64::NAN
        };
        Self {
            q,
            budgets: budgets.to_vec(),
            partial_sums,
            increment_ratio: ratio,
            stabilizing: ratio < STABILITY_RATIO,
        }
    }
}

pub fn diagnose(
    q: f64,
    budgets: &[u64],
    mut partial: impl FnMut(u64) -> Result<f64, SeriesError>,
) -> Result<DivergenceReport, SeriesError> {
    let sums = budgets.iter().map(|&b| partial(b)).collect::<Result<Vec<_>, _>>()?;
    Ok(DivergenceReport::from_partial_sums(q, budgets, sums))
}
