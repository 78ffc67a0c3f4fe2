use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::FiberError;
use crate::algebra::number::rat;

/// The offset `ε ∈ {0, ½}` of the weight lattice `m′ = m + ε`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Parity {
    Zero,
    Half,
}

impl Parity {
    pub fn doubled(self) -> i64 {
        match self {
            Parity::Zero => 0,
            Parity::Half => 1,
        }
    }

    pub fn value(self) -> f64 {
        self.doubled() as f64 / 2.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DiscreteSign {
    Negative,
    Positive,
}

/// A tempered irreducible representation of SU(1,1).
///
/// Discrete labels store `2l`, so `two_l = -1` is `l = -½`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum FiberLabel {
    Principal { rho: f64, eps: Parity },
    Discrete { sign: DiscreteSign, two_l: i64 },
}

impl FiberLabel {
    pub fn principal(rho: f64, eps: Parity) -> Result<Self, FiberError> {
        if !rho.is_finite() || rho < 0.0 {
            return Err(FiberError::InvalidLabel(format!("rho = {rho}")));
        }
        Ok(FiberLabel::Principal { rho, eps })
    }

    pub fn discrete(sign: DiscreteSign, two_l: i64) -> Result<Self, FiberError> {
        if two_l >= 0 {
            return Err(FiberError::InvalidLabel(format!("2l = {two_l} is not negative")));
        }
        Ok(FiberLabel::Discrete { sign, two_l })
    }

    pub fn negative(two_l: i64) -> Self {
        Self::discrete(DiscreteSign::Negative, two_l).expect("2l < 0")
    }

    pub fn positive(two_l: i64) -> Self {
        Self::discrete(DiscreteSign::Positive, two_l).expect("2l < 0")
    }

    pub fn parity(&self) -> Parity {
        match *self {
            FiberLabel::Principal { eps, .. } => eps,
            FiberLabel::Discrete { two_l, .. } => {
                if two_l.rem_euclid(2) == 1 {
                    Parity::Half
                } else {
                    Parity::Zero
                }
            }
        }
    }

    /// `2m′` for the lattice index `m`.
    pub fn doubled_weight(&self, m: i64) -> i64 {
        2 * m + self.parity().doubled()
    }

    pub fn weight(&self, m: i64) -> f64 {
        self.doubled_weight(m) as f64 / 2.0
    }

    pub fn exact_weight(&self, m: i64) -> BigRational {
        rat(self.doubled_weight(m), 2)
    }

    pub fn l(&self) -> Option<f64> {
        match *self {
            FiberLabel::Discrete { two_l, .. } => Some(two_l as f64 / 2.0),
            FiberLabel::Principal { .. } => None,
        }
    }

    /// Inclusive bounds on the lattice index `m`.
    ///
    /// Negative discrete series: `m′ ≤ l`. Positive discrete series: `m′ ≥ −l`.
    pub fn support(&self) -> (Option<i64>, Option<i64>) {
        match *self {
            FiberLabel::Principal { .. } => (None, None),
            FiberLabel::Discrete { sign, two_l } => {
                let e = self.parity().doubled();
                match sign {
                    DiscreteSign::Negative => (None, Some((two_l - e) / 2)),
                    DiscreteSign::Positive => (Some((-two_l - e) / 2), None),
                }
            }
        }
    }

    pub fn contains(&self, m: i64) -> bool {
        let (lo, hi) = self.support();
        lo.is_none_or(|lo| m >= lo) && hi.is_none_or(|hi| m <= hi)
    }

    /// Intersection of `[lo, hi]` with the support.
    pub fn clip(&self, lo: i64, hi: i64) -> Result<(i64, i64), FiberError> {
        let (slo, shi) = self.support();
        let a = slo.map_or(lo, |s| s.max(lo));
        let b = shi.map_or(hi, |s| s.min(hi));
        if a > b {
            return Err(FiberError::EmptyWindow { fiber: *self, lo, hi });
        }
        Ok((a, b))
    }

    /// The scalar by which the Casimir acts: `½τ(τ+1) = −½(ρ²+¼)` or `½l(l+1)`.
    pub fn casimir_value(&self) -> f64 {
        match *self {
            FiberLabel::Principal { rho, .. } => -0.5 * (rho * rho + 0.25),
            FiberLabel::Discrete { two_l, .. } => {
                let l = two_l as f64 / 2.0;
                0.5 * l * (l + 1.0)
            }
        }
    }

    /// `|τ|² = ρ² + ¼` on principal fibers.
    pub fn tau_norm_sqr(&self) -> Option<f64> {
        match *self {
            FiberLabel::Principal { rho, .. } => Some(rho * rho + 0.25),
            FiberLabel::Discrete { .. } => None,
        }
    }
}

impl fmt::Display for FiberLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FiberLabel::Principal { rho, eps } => write!(f, "principal(rho={rho}, eps={})", eps.value()),
            FiberLabel::Discrete { sign, two_l } => {
                let s = match sign {
                    DiscreteSign::Negative => '-',
                    DiscreteSign::Positive => '+',
                };
                if two_l % 2 == 0 {
                    write!(f, "discrete{s}(l={})", two_l / 2)
                } else {
                    write!(f, "discrete{s}(l={two_l}/2)")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_follows_two_l() {
        assert_eq!(FiberLabel::negative(-1).parity(), Parity::Half);
        assert_eq!(FiberLabel::negative(-4).parity(), Parity::Zero);
    }

    #[test]
    fn supports() {
        // l = -3/2: m′ = m + ½ ≤ -3/2 ⇔ m ≤ -2
        assert_eq!(FiberLabel::negative(-3).support(), (None, Some(-2)));
        // l = -3/2: m′ ≥ 3/2 ⇔ m ≥ 1
        assert_eq!(FiberLabel::positive(-3).support(), (Some(1), None));
        assert_eq!(FiberLabel::negative(-4).support(), (None, Some(-2)));
        assert_eq!(FiberLabel::positive(-4).support(), (Some(2), None));
        assert!(FiberLabel::principal(1.0, Parity::Zero).unwrap().contains(-1000));
    }

    #[test]
    fn invalid_labels() {
        assert!(FiberLabel::discrete(DiscreteSign::Negative, 0).is_err());
        assert!(FiberLabel::principal(-1.0, Parity::Zero).is_err());
    }

    #[test]
    fn clip_window() {
        let f = FiberLabel::positive(-3);
        assert_eq!(f.clip(-5, 5).unwrap(), (1, 5));
        assert!(f.clip(-5, 0).is_err());
    }
}
