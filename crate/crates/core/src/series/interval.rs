use std::ops::{Add, Mul, Neg};

use serde::{Deserialize, Serialize};

/// A closed real interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn around(x: f64, radius: f64) -> Self {
        Self { lo: x - radius, hi: x + radius }
    }

    pub fn zero() -> Self {
        Self::point(0.0)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn is_subset_of(&self, o: &Interval) -> bool {
        o.lo <= self.lo && self.hi <= o.hi
    }

    pub fn intersect(&self, o: &Interval) -> Interval {
        Interval { lo: self.lo.max(o.lo), hi: self.hi.min(o.hi) }
    }

    /// Widens both ends by `rel·|x|` to absorb floating-point rounding.
    pub fn pad(&self, rel: f64) -> Interval {
        Interval { lo: self.lo - rel * self.lo.abs(), hi: self.hi + rel * self.hi.abs() }
    }
}

/// Neumaier-compensated sum of one endpoint.
#[derive(Clone, Copy, Debug, Default)]
struct Compensated {
    sum: f64,
    carry: f64,
    abs: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs += x.abs();
    }

    /// Value and a bound on its rounding error for `n` summands.
    fn finish(&self, n: u64) -> (f64, f64) {
        let v = self.sum + self.carry;
        let eps = f64::EPSILON;
        (v, 2.0 * eps * v.abs() + 2.0 * n as f64 * eps * eps * self.abs)
    }
}

/// Accumulates intervals with compensated endpoint sums and rounds the
/// result outward, so the error does not grow with the number of terms.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntervalSum {
    lo: Compensated,
    hi: Compensated,
    n: u64,
}

impl IntervalSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, x: Interval) {
        self.lo.add(x.lo);
        self.hi.add(x.hi);
        self.n += 1;
    }

    pub fn total(&self) -> Interval {
        let (lo, elo) = self.lo.finish(self.n);
        let (hi, ehi) = self.hi.finish(self.n);
        Interval { lo: lo - elo, hi: hi + ehi }
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval { lo: self.lo + o.lo, hi: self.hi + o.hi }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl Mul<f64> for Interval {
    type Output = Interval;
    fn mul(self, k: f64) -> Interval {
        if k >= 0.0 {
            Interval { lo: self.lo * k, hi: self.hi * k }
        } else {
            Interval { lo: self.hi * k, hi: self.lo * k }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_contains_exact_value() {
        // Σ_{k=1}^{10^6} 1/k² with exact tail ζ(2) − Σ known to ~1e-6; compare with a
        // reverse-order sum, which is accurate to a few ulps.
        let mut acc = IntervalSum::new();
        for k in 1..=1_000_000u64 {
            acc.push(Interval::point(1.0 / (k * k) as f64));
        }
        let reverse: f64 = (1..=1_000_000u64).rev().map(|k| 1.0 / (k * k) as f64).sum();
        let t = acc.total();
        assert!(t.contains(reverse), "{t:?} {reverse}");
        assert!(t.width() < 1e-14);
    }

    #[test]
    fn scaling_by_negative_flips() {
        let i = Interval::new(1.0, 2.0) * -2.0;
        assert_eq!(i, Interval::new(-4.0, -2.0));
        assert!(Interval::new(0.0, 1.0).is_subset_of(&Interval::new(-1.0, 1.0)));
    }
}
