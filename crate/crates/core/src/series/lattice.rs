//! Weighted double sums `w · Σ_{n≥1} Σ_{k≥k0} n · (α(k + βn)² + γn² + c)^{−q/2}`.
//!
//! Points with `n + k < M` (`M ≈ √budget`) are summed explicitly. For
//! `n ≤ N` the remaining `k`-tail is enclosed by [`PowerKernel::lattice_tail`];
//! for `n > N` the rescaling `k = xn` reduces the inner sum to a Riemann sum of
//! `H(x) = (α(x + β)² + γ)^{−q/2}`, bracketed by `n∫H` and monotonicity.

use super::interval::Interval;
use super::tails::{power_sum_tail, PowerKernel};
use super::{SeriesEnclosure, SeriesError};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticLattice {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub c: f64,
    pub weight: f64,
    pub k0: u64,
}

impl QuadraticLattice {
    /// `Σ_{n,k≥1} n / (a k² + b n²)^{q/2}`.
    pub fn siegel(a: f64, b: f64) -> Self {
        Self { alpha: a, beta: 0.0, gamma: b, c: 0.0, weight: 1.0, k0: 1 }
    }

    fn validate(&self) -> Result<(), SeriesError> {
        let ok = self.alpha > 0.0
            && self.beta >= 0.0
            && self.c >= 0.0
            && self.weight >= 0.0
            && self.alpha * self.beta * self.beta + self.gamma > 0.0;
        if ok {
            Ok(())
        } else {
            Err(SeriesError::InvalidParameter(format!("{self:?}")))
        }
    }

    pub fn denominator(&self, n: u64, k: u64) -> f64 {
        let (n, k) = (n as f64, k as f64);
        let u = k + self.beta * n;
        self.alpha * u * u + self.gamma * n * n + self.c
    }

    pub fn term(&self, q: f64, n: u64, k: u64) -> f64 {
        self.weight * n as f64 * self.denominator(n, k).powf(-0.5 * q)
    }

    fn explicit_radius(budget: u64) -> u64 {
        ((budget as f64).sqrt().ceil() as u64).max(2)
    }

    /// Sum over the explicit region `n + k < M`; returns the sum and the number of terms.
    pub fn partial_sum(&self, q: f64, budget: u64) -> Result<(f64, u64), SeriesError> {
        self.validate()?;
        let m = Self::explicit_radius(budget);
        let mut total = 0.0;
        let mut count = 0;
        for n in 1..m {
            let mut inner = 0.0;
            for k in self.k0..m.saturating_sub(n) {
                inner += self.denominator(n, k).powf(-0.5 * q);
                count += 1;
            }
            total += self.weight * n as f64 * inner;
        }
        Ok((total, count))
    }

    /// Certified enclosure of the full sum; requires `q > 3`.
    pub fn enclose(&self, q: f64, budget: u64) -> Result<SeriesEnclosure, SeriesError> {
        self.validate()?;
        if !(q > 3.0) {
            return Err(SeriesError::NotCertifiable { q });
        }
        let s = 0.5 * q;
        let kernel = PowerKernel::new(s)?;
        let m = Self::explicit_radius(budget);
        let cutoff = (budget / 2).max(m);
        let a_scale = self.alpha.powf(-s);

        let mut lower = 0.0;
        let mut upper = 0.0;
        let mut terms = 0u64;
        for n in 1..=cutoff {
            let nf = n as f64;
            let first_tail = if n < m { self.k0.max(m - n) } else { self.k0 };
            let mut explicit = 0.0;
            for k in self.k0..first_tail {
                explicit += self.denominator(n, k).powf(-s);
                terms += 1;
            }
            let delta = (self.gamma * nf * nf + self.c) / self.alpha;
            let tail = kernel.lattice_tail(delta, first_tail as f64 + self.beta * nf)? * a_scale;
            terms += 1;
            lower += self.weight * nf * (explicit + tail.lo);
            upper += self.weight * nf * (explicit + tail.hi);
        }

        // n > N: H_n(x) = (α(x+β)² + γ + c/n²)^{−s}, H_n ∈ [L·H, H].
        let h = |x: f64| (self.alpha * (x + self.beta).powi(2) + self.gamma).powf(-s);
        let j = kernel.tail(self.gamma / self.alpha, self.beta)? * a_scale;
        let floor = self.alpha * self.beta * self.beta + self.gamma;
        let shrink = (1.0 + self.c / (floor * (cutoff as f64 + 1.0).powi(2))).powf(-s);
        let k0 = self.k0 as f64;
        let p_main = power_sum_tail(2.0 - q, cutoff);
        let p_edge = power_sum_tail(1.0 - q, cutoff);
        let outer_lo = shrink * (j.lo * p_main.lo - k0 * h(0.0) * p_edge.hi);
        let outer_hi = j.hi * p_main.hi + (h(0.0) - k0 * h(k0 / (cutoff as f64 + 1.0))) * p_edge.hi;
        lower += self.weight * outer_lo.max(0.0);
        upper += self.weight * outer_hi;

        let enclosure = Interval::new(lower, upper).pad(1e-13);
        SeriesEnclosure::new(enclosure, terms, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(l: &QuadraticLattice, q: f64, n_max: u64, k_max: u64) -> f64 {
        let mut t = 0.0;
        for n in 1..=n_max {
            for k in l.k0..=k_max {
                t += l.term(q, n, k);
            }
        }
        t
    }

    #[test]
    fn siegel_encloses_brute_force() {
        let l = QuadraticLattice::siegel(1.0, 1.0);
        let e = l.enclose(4.0, 100_000).unwrap();
        let b = brute(&l, 4.0, 3000, 3000);
        // The truncated brute sum is a lower bound; the omitted part is below 1e-3.
        assert!(b <= e.upper);
        assert!(b + 1e-3 >= e.lower);
        assert!(e.width() < 1e-6 * e.lower);
    }

    #[test]
    fn explicit_count_tracks_budget() {
        let l = QuadraticLattice::siegel(1.0, 1.0);
        let (_, c) = l.partial_sum(4.0, 10_000).unwrap();
        assert!(c > 4_000 && c < 6_000, "{c}");
    }

    #[test]
    fn rejects_low_q() {
        assert!(matches!(
            QuadraticLattice::siegel(1.0, 1.0).enclose(3.0, 1000),
            Err(SeriesError::NotCertifiable { .. })
        ));
    }

    #[test]
    fn doubling_budget_nests() {
        let l = QuadraticLattice { alpha: 1.0, beta: 0.5, gamma: -0.125, c: 1.0, weight: 0.5, k0: 0 };
        let a = l.enclose(3.5, 20_000).unwrap();
        let b = l.enclose(3.5, 40_000).unwrap();
        assert!(b.lower >= a.lower && b.upper <= a.upper, "{a:?} {b:?}");
    }
}
