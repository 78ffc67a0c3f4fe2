//! Growth of `[Re D, Im D]` against `Re D`, `Im D` on the two-component
//! vectors `x = (t_m, t_{m+1})` of a negative discrete-series fiber.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::banded::SpinFiberOperator;
use super::label::FiberLabel;
use super::ladder::spin_to_fiber;
use super::FiberError;
use crate::algebra::dirac::{real_imag_parts, T_CUBIC};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthRow {
    pub m: i64,
    pub q_num: f64,
    pub q_den: f64,
    pub ratio: f64,
}

/// How a computed column relates to a reference closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchMode {
    Exact,
    UpToSign,
    None,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthTable {
    pub two_l: i64,
    pub rows: Vec<GrowthRow>,
    pub num_exponent: f64,
    pub den_exponent: f64,
    pub ratio_exponent: f64,
    pub numerator_match: MatchMode,
    pub denominator_match: MatchMode,
}

/// Reference numerator `−¼(−2m−1)²(1−m)(−m−2)`.
pub fn reference_numerator(m: i64) -> f64 {
    let m = m as f64;
    -0.25 * (-2.0 * m - 1.0).powi(2) * (1.0 - m) * (-m - 2.0)
}

/// Reference denominator `1 + ½(m+½)² − ½(1−m)(−m−2)`, identically `17/8`.
pub fn reference_denominator(m: i64) -> f64 {
    let m = m as f64;
    1.0 + 0.5 * (m + 0.5).powi(2) - 0.5 * (1.0 - m) * (-m - 2.0)
}

fn norm_sqr(v: &BTreeMap<(usize, i64), Complex64>) -> f64 {
    v.values().map(|z| z.norm_sqr()).sum()
}

struct Parts {
    re: SpinFiberOperator<Complex64>,
    im: SpinFiberOperator<Complex64>,
    comm: SpinFiberOperator<Complex64>,
}

fn parts(fiber: FiberLabel) -> Parts {
    let (re, im) = real_imag_parts(&T_CUBIC);
    let comm = &(&re * &im) - &(&im * &re);
    Parts { re: spin_to_fiber(&re, fiber), im: spin_to_fiber(&im, fiber), comm: spin_to_fiber(&comm, fiber) }
}

fn row(p: &Parts, m: i64) -> GrowthRow {
    let x: BTreeMap<(usize, i64), Complex64> =
        [((0, m), Complex64::new(1.0, 0.0)), ((1, m + 1), Complex64::new(1.0, 0.0))].into();
    let n = norm_sqr(&x);
    let q_num = norm_sqr(&p.comm.apply(&x)) / n;
    let q_den = (n + norm_sqr(&p.re.apply(&x)) + norm_sqr(&p.im.apply(&x))) / n;
    GrowthRow { m, q_num, q_den, ratio: q_num / q_den }
}

/// Least-squares slope of `ln|y|` against `ln|x|`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.abs().ln(), y.abs().ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

fn classify(values: &[f64], reference: &[f64]) -> MatchMode {
    let near = |a: f64, b: f64| (a - b).abs() <= 1e-9 * b.abs().max(1.0);
    if values.iter().zip(reference).all(|(&a, &b)| near(a, b)) {
        MatchMode::Exact
    } else if values.iter().zip(reference).all(|(&a, &b)| near(a, -b)) {
        MatchMode::UpToSign
    } else {
        MatchMode::None
    }
}

/// Tabulates `Q_num`, `Q_den` over `ms` on the negative discrete fiber `2l`.
pub fn counterexample_growth(two_l: i64, ms: &[i64]) -> Result<GrowthTable, FiberError> {
    let fiber = FiberLabel::discrete(super::label::DiscreteSign::Negative, two_l)?;
    if let Some(&m) = ms.iter().find(|&&m| !fiber.contains(m) || !fiber.contains(m + 1)) {
        return Err(FiberError::OutOfSupport { fiber, m });
    }
    let p = parts(fiber);
    let rows: Vec<GrowthRow> = ms.iter().map(|&m| row(&p, m)).collect();
    let fit = |f: fn(&GrowthRow) -> f64| {
        loglog_slope(&rows.iter().map(|r| (r.m as f64, f(r))).collect::<Vec<_>>())
    };
    let num: Vec<f64> = rows.iter().map(|r| r.q_num).collect();
    let den: Vec<f64> = rows.iter().map(|r| r.q_den).collect();
    let ref_num: Vec<f64> = ms.iter().map(|&m| reference_numerator(m)).collect();
    let ref_den: Vec<f64> = ms.iter().map(|&m| reference_denominator(m)).collect();
    Ok(GrowthTable {
        two_l,
        num_exponent: fit(|r| r.q_num),
        den_exponent: fit(|r| r.q_den),
        ratio_exponent: fit(|r| r.ratio),
        numerator_match: classify(&num, &ref_num),
        denominator_match: classify(&den, &ref_den),
        rows,
    })
}
