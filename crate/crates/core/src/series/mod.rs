//! Plancherel densities and certified enclosures of the series
//! `∫ Tr[R_±^q(π)] dμ(π)` over the tempered dual.
//!
//! The discrete contributions reduce, after `n = −2l − 1` and a shift of the
//! weight index, to
//! `½ Σ_{n≥1} n Σ_{k≥k0} (k² + kn + n²/8 + shift − ⅛)^{−q/2}`.

pub mod diagnostics;
pub mod interval;
pub mod lattice;
pub mod principal;
pub mod quadrature;
pub mod tails;

use std::f64::consts::PI;
use std::io::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fibers::{DiscreteSign, FiberLabel, Parity};
pub use diagnostics::{DivergenceReport, DIAGNOSTIC_BUDGETS};
pub use interval::Interval;
pub use lattice::QuadraticLattice;
pub use principal::{principal_reference_bounds, series_principal, PrincipalSeries};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeriesError {
    #[error("q = {q} is outside the certified range q > 3")]
    NotCertifiable { q: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("quadrature on [{a}, {b}] did not converge (error estimate {error})")]
    Quadrature { a: f64, b: f64, error: f64 },
    #[error("enclosure [{lower}, {upper}] is empty or not finite")]
    NonShrinking { lower: f64, upper: f64 },
    #[error("csv export failed: {0}")]
    Export(String),
}

/// A certified interval `[lower, upper]` containing a series value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesEnclosure {
    pub lower: f64,
    pub upper: f64,
    pub terms_used: u64,
    pub q: f64,
}

impl SeriesEnclosure {
    pub fn new(iv: Interval, terms_used: u64, q: f64) -> Result<Self, SeriesError> {
        if !(iv.lo.is_finite() && iv.hi.is_finite() && iv.lo <= iv.hi) {
            return Err(SeriesError::NonShrinking { lower: iv.lo, upper: iv.hi });
        }
        Ok(Self { lower: iv.lo, upper: iv.hi, terms_used, q })
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.lower, self.upper)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn relative_width(&self) -> f64 {
        self.width() / self.lower.abs().max(f64::MIN_POSITIVE)
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn is_within(&self, o: &Interval) -> bool {
        self.interval().is_subset_of(o)
    }

    pub fn nested_in(&self, o: &SeriesEnclosure) -> bool {
        self.interval().is_subset_of(&o.interval())
    }
}

/// The sign in `m′(m′ ± 1)`, i.e. the diagonal block of `⟨D⟩²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Component {
    Plus,
    Minus,
}

impl Component {
    /// `v = m′ + offset` completes the square `m′(m′ ± 1) = v² − ¼`.
    pub fn offset(self) -> f64 {
        match self {
            Component::Plus => 0.5,
            Component::Minus => -0.5,
        }
    }

    pub fn sign(self) -> f64 {
        2.0 * self.offset()
    }
}

/// The shift in `(⟨D⟩² − ⅛ + shift)^{−q/2}` with `shift = 9/8`.
pub const SHIFT_RESOLVENT: f64 = 9.0 / 8.0;
/// `5/4`, the constant that appears once `½|τ|² = ½ρ² + ⅛` is expanded.
pub const SHIFT_EXPANDED: f64 = 5.0 / 4.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesConfig {
    pub shift: f64,
    pub budget: u64,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self { shift: SHIFT_RESOLVENT, budget: 1_000_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlancherelDensity {
    pub fiber: FiberLabel,
    pub weight: f64,
}

/// `−l − ½` on discrete series; `½ρ tanh πρ` (`ε = 0`) or `½ρ coth πρ` (`ε = ½`)
/// on principal series.
pub fn plancherel_weight(fiber: FiberLabel) -> PlancherelDensity {
    let weight = match fiber {
        FiberLabel::Discrete { two_l, .. } => -(two_l as f64) / 2.0 - 0.5,
        FiberLabel::Principal { rho, eps: Parity::Zero } => 0.5 * rho * (PI * rho).tanh(),
        FiberLabel::Principal { rho, eps: Parity::Half } => {
            if rho == 0.0 {
                0.5 / PI
            } else {
                0.5 * rho / (PI * rho).tanh()
            }
        }
    };
    PlancherelDensity { fiber, weight }
}

/// Eigenvalue `½|τ|² + m′(m′±1) + shift` or `−½l(l+1) + m′(m′±1) + shift`
/// of the resolvent symbol on the weight vector `m`.
pub fn resolvent_symbol(fiber: FiberLabel, m: i64, component: Component, shift: f64) -> f64 {
    let w = fiber.weight(m);
    let base = match fiber {
        FiberLabel::Principal { rho, .. } => 0.5 * (rho * rho + 0.25),
        FiberLabel::Discrete { two_l, .. } => {
            let l = two_l as f64 / 2.0;
            -0.5 * l * (l + 1.0)
        }
    };
    base + w * (w + component.sign()) + shift
}

/// The reduced double sum for one discrete family and component.
pub fn discrete_lattice(family: DiscreteSign, component: Component, shift: f64) -> QuadraticLattice {
    let k0 = match (family, component) {
        (DiscreteSign::Negative, Component::Plus) | (DiscreteSign::Positive, Component::Minus) => 0,
        _ => 1,
    };
    QuadraticLattice { alpha: 1.0, beta: 0.5, gamma: -0.125, c: shift - 0.125, weight: 0.5, k0 }
}

/// `S^∓_±`: the discrete-series contribution, certified for `q > 3`.
pub fn series_discrete(
    q: f64,
    component: Component,
    family: DiscreteSign,
    cfg: &SeriesConfig,
) -> Result<SeriesEnclosure, SeriesError> {
    discrete_lattice(family, component, cfg.shift).enclose(q, cfg.budget)
}

/// `Σ_{n,k≥1} n / (a k² + b n²)^{q/2}`.
pub fn siegel_comparison(q: f64, a: f64, b: f64, budget: u64) -> Result<SeriesEnclosure, SeriesError> {
    if !(a > 0.0 && b > 0.0) {
        return Err(SeriesError::InvalidParameter(format!("a = {a}, b = {b}")));
    }
    QuadraticLattice::siegel(a, b).enclose(q, budget)
}

/// Bracketing series for one discrete family: `½·Siegel(a₁, b₁) ≤ S ≤ ½·Siegel(a₂, b₂)`.
pub fn discrete_reference_forms(family: DiscreteSign) -> [(f64, f64); 2] {
    match family {
        DiscreteSign::Negative => [(4.0, 25.0 / 8.0), (1.0, 1.0 / 8.0)],
        DiscreteSign::Positive => [(2.0, 9.0 / 8.0), (0.5, 1.0 / 8.0)],
    }
}

pub fn discrete_reference_bounds(q: f64, family: DiscreteSign, budget: u64) -> Result<Interval, SeriesError> {
    let [(a1, b1), (a2, b2)] = discrete_reference_forms(family);
    let lo = siegel_comparison(q, a1, b1, budget)?;
    let hi = siegel_comparison(q, a2, b2, budget)?;
    Ok(Interval::new(0.5 * lo.lower, 0.5 * hi.upper))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResolventTrace {
    pub positive: SeriesEnclosure,
    pub negative: SeriesEnclosure,
    pub principal: SeriesEnclosure,
    pub total: SeriesEnclosure,
}

/// `S^+_+ + S^-_+ + S^χ_+`, certified for `q > 3`.
pub fn resolvent_trace(q: f64, cfg: &SeriesConfig) -> Result<ResolventTrace, SeriesError> {
    let positive = series_discrete(q, Component::Plus, DiscreteSign::Positive, cfg)?;
    let negative = series_discrete(q, Component::Plus, DiscreteSign::Negative, cfg)?;
    let principal = series_principal(q, Component::Plus, cfg.shift, cfg.budget)?.total;
    let total = SeriesEnclosure::new(
        positive.interval() + negative.interval() + principal.interval(),
        positive.terms_used + negative.terms_used + principal.terms_used,
        q,
    )?;
    Ok(ResolventTrace { positive, negative, principal, total })
}

/// The three partial sums of the resolvent trace at one budget.
pub fn resolvent_partial_sums(q: f64, shift: f64, budget: u64) -> Result<[f64; 3], SeriesError> {
    let pos = discrete_lattice(DiscreteSign::Positive, Component::Plus, shift).partial_sum(q, budget)?.0;
    let neg = discrete_lattice(DiscreteSign::Negative, Component::Plus, shift).partial_sum(q, budget)?.0;
    let chi = principal::principal_partial_sum(q, Component::Plus, shift, budget)?.0;
    Ok([pos, neg, chi])
}

pub fn diagnose_discrete(
    q: f64,
    component: Component,
    family: DiscreteSign,
    shift: f64,
    budgets: &[u64],
) -> Result<DivergenceReport, SeriesError> {
    let lat = discrete_lattice(family, component, shift);
    diagnostics::diagnose(q, budgets, |b| lat.partial_sum(q, b).map(|r| r.0))
}

pub fn diagnose_principal(q: f64, component: Component, shift: f64, budgets: &[u64]) -> Result<DivergenceReport, SeriesError> {
    diagnostics::diagnose(q, budgets, |b| principal::principal_partial_sum(q, component, shift, b).map(|r| r.0))
}

pub fn diagnose_resolvent(q: f64, shift: f64, budgets: &[u64]) -> Result<DivergenceReport, SeriesError> {
    diagnostics::diagnose(q, budgets, |b| resolvent_partial_sums(q, shift, b).map(|p| p.iter().sum()))
}

/// One row of a partial-sum trace.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub series: String,
    pub q: f64,
    pub budget: u64,
    pub partial_sum: f64,
}

/// Partial sums of the three resolvent-trace components over `budgets`.
pub fn partial_sum_trace(q: f64, shift: f64, budgets: &[u64]) -> Result<Vec<TraceRow>, SeriesError> {
    let names = ["S+_+", "S-_+", "Schi_+"];
    let mut rows = Vec::new();
    for &b in budgets {
        let sums = resolvent_partial_sums(q, shift, b)?;
        for (name, v) in names.iter().zip(sums) {
            rows.push(TraceRow { series: name.to_string(), q, budget: b, partial_sum: v });
        }
    }
    Ok(rows)
}

pub fn write_trace_csv<W: Write>(rows: &[TraceRow], out: W) -> Result<(), SeriesError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| SeriesError::Export(e.to_string()))?;
    }
    w.flush().map_err(|e| SeriesError::Export(e.to_string()))
}
