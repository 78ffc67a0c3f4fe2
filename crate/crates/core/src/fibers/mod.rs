//! Tempered representations of SU(1,1) as weight lattices carrying banded
//! ladder operators, and the Dirac operators restricted to them.

pub mod banded;
pub mod counterexample;
pub mod label;
pub mod ladder;
pub mod truncate;

use thiserror::Error;

pub use banded::{FiberOperator, FiberScalar, SpinFiberOperator};
pub use counterexample::{counterexample_growth, GrowthRow, GrowthTable, MatchMode};
pub use label::{DiscreteSign, FiberLabel, Parity};
pub use ladder::{
    env_to_fiber, env_to_fiber_exact, ladder_action, spin_to_fiber, spin_to_fiber_exact, Exact, LadderGenerator,
    Numeric, Realization,
};
pub use truncate::{truncate, truncate_scalar, TruncatedMatrix};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FiberError {
    #[error("invalid fiber label: {0}")]
    InvalidLabel(String),
    #[error("window [{lo}, {hi}] does not meet the support of {fiber}")]
    EmptyWindow { fiber: FiberLabel, lo: i64, hi: i64 },
    #[error("index {m} lies outside the support of {fiber}")]
    OutOfSupport { fiber: FiberLabel, m: i64 },
}

/// Fiber value of `½(−e1²−e2²−e3² ∓ 2ie3 + ¼)`, i.e. the diagonal of
/// `⟨D⟩²` in component `0` (upper sign) or `1` (lower sign).
pub fn langle_squared_value(fiber: FiberLabel, m: i64, component: usize) -> f64 {
    let w = fiber.weight(m);
    let base = match fiber {
        FiberLabel::Principal { rho, .. } => 0.5 * (rho * rho + 0.25),
        FiberLabel::Discrete { two_l, .. } => {
            let l = two_l as f64 / 2.0;
            -0.5 * l * (l + 1.0)
        }
    };
    let sign = if component == 0 { 1.0 } else { -1.0 };
    base + w * (w + sign) + 0.125
}
