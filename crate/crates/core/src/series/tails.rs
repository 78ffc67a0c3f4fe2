//! Enclosures for `∫_u^∞ (x² + Δ)^{−s} dx` and `Σ_{j≥0} ((u + j)² + Δ)^{−s}`.

use super::interval::Interval;
use super::quadrature::integrate;
use super::SeriesError;

const SERIES_TOL: f64 = 1e-17;
const MAX_SERIES_TERMS: usize = 400;

/// Sums `Σ_j binom(−s, j) x^j · scale / (2j + offset)` for `|x| ≤ ½` with a
/// geometric bound on the remainder.
fn binomial_sum(s: f64, x: f64, scale: f64, offset: f64) -> Interval {
    let mut c = 1.0;
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut j = 0usize;
    loop {
        let t = c * scale / (2.0 * j as f64 + offset);
        sum += t;
        abs_sum += t.abs();
        c *= -(s + j as f64) / (j as f64 + 1.0) * x;
        j += 1;
        let next = (c * scale / (2.0 * j as f64 + offset)).abs();
        let ratio = x.abs() * ((s + j as f64) / (j as f64 + 1.0)).max(1.0);
        if ratio < 1.0 {
            let rem = next / (1.0 - ratio);
            if rem <= SERIES_TOL * sum.abs() || j >= MAX_SERIES_TERMS {
                let round = 4.0 * f64::EPSILON * abs_sum * (j as f64 + 1.0);
                return Interval::around(sum, rem + round);
            }
        }
    }
}

/// The kernel `f(u) = (u² + Δ)^{−s}` for a fixed exponent `s > ½`.
#[derive(Clone, Copy, Debug)]
pub struct PowerKernel {
    s: f64,
    /// `∫_0^∞ (1 + y²)^{−s} dy`.
    half_line: Interval,
}

impl PowerKernel {
    pub fn new(s: f64) -> Result<Self, SeriesError> {
        if !(s > 0.5) {
            return Err(SeriesError::InvalidParameter(format!("kernel exponent {s} must exceed 1/2")));
        }
        let y1 = 2f64.sqrt();
        let q = integrate(|y| (1.0 + y * y).powf(-s), 0.0, y1, 1e-17, 1e-15)?;
        let head = Interval::around(q.value, q.error);
        let tail = binomial_sum(s, 1.0 / (y1 * y1), y1.powf(1.0 - 2.0 * s), 2.0 * s - 1.0);
        Ok(Self { s, half_line: head + tail })
    }

    pub fn exponent(&self) -> f64 {
        self.s
    }

    pub fn value(&self, delta: f64, u: f64) -> f64 {
        (u * u + delta).powf(-self.s)
    }

    fn slope(&self, delta: f64, u: f64) -> f64 {
        2.0 * self.s * u * (u * u + delta).powf(-self.s - 1.0)
    }

    fn check(&self, delta: f64, u: f64) -> Result<(), SeriesError> {
        if !(u >= 0.0) || !(u * u + delta > 0.0) {
            return Err(SeriesError::InvalidParameter(format!("tail start u = {u} with delta = {delta}")));
        }
        Ok(())
    }

    /// Encloses `∫_u^∞ (x² + Δ)^{−s} dx` for `u ≥ 0`, `u² + Δ > 0`.
    pub fn tail(&self, delta: f64, u: f64) -> Result<Interval, SeriesError> {
        self.check(delta, u)?;
        let s = self.s;
        if delta == 0.0 {
            return Ok(Interval::point(u.powf(1.0 - 2.0 * s) / (2.0 * s - 1.0)).pad(4.0 * f64::EPSILON));
        }
        if u * u >= 2.0 * delta.abs() {
            return Ok(binomial_sum(s, delta / (u * u), u.powf(1.0 - 2.0 * s), 2.0 * s - 1.0));
        }
        if delta > 0.0 {
            let r = delta.sqrt();
            let y0 = u / r;
            let head = if y0 * y0 <= 0.5 {
                binomial_sum(s, y0 * y0, y0, 1.0)
            } else {
                let q = integrate(|y| (1.0 + y * y).powf(-s), 0.0, y0, 1e-17, 1e-15)?;
                Interval::around(q.value, q.error)
            };
            let scale = delta.powf(0.5 - s);
            return Ok((self.half_line + -head) * scale);
        }
        let u1 = (2.0 * delta.abs()).sqrt();
        let q = integrate(|x| (x * x + delta).powf(-s), u, u1, 1e-300, 1e-14)?;
        let far = binomial_sum(s, delta / (u1 * u1), u1.powf(1.0 - 2.0 * s), 2.0 * s - 1.0);
        Ok(Interval::around(q.value, q.error) + far)
    }

    /// Encloses `Σ_{j≥0} ((u + j)² + Δ)^{−s}` via the trapezoid rule, whose
    /// total error is at most an eighth of the variation of `f′` on `[u, ∞)`.
    pub fn lattice_tail(&self, delta: f64, u: f64) -> Result<Interval, SeriesError> {
        let integral = self.tail(delta, u)?;
        let f0 = self.value(delta, u);
        let s = self.s;
        let variation = if delta <= 0.0 || (2.0 * s + 1.0) * u * u >= delta {
            self.slope(delta, u)
        } else {
            let inflection = (delta / (2.0 * s + 1.0)).sqrt();
            2.0 * self.slope(delta, inflection) - self.slope(delta, u)
        };
        let trapezoid = Interval::new(
            integral.lo + 0.5 * f0 - variation / 8.0,
            integral.hi + 0.5 * f0 + variation / 8.0,
        );
        let monotone = Interval::new(integral.lo, integral.hi + f0);
        Ok(trapezoid.intersect(&monotone).pad(4.0 * f64::EPSILON))
    }
}

/// Encloses `Σ_{n ≥ N+1} n^p` for `p < −1`.
pub fn power_sum_tail(p: f64, n: u64) -> Interval {
    let a = n as f64 + 1.0;
    let b = n as f64 + 0.5;
    let e = -p - 1.0;
    Interval::new(a.powf(-e) / e + 0.5 * a.powf(p), b.powf(-e) / e).pad(8.0 * f64::EPSILON)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_tail(s: f64, delta: f64, u: f64) -> f64 {
        // ∫_u^U by quadrature plus the leading asymptotic beyond U
        let upper = 1e4_f64.max(u * 10.0);
        let q = integrate(|x| (x * x + delta).powf(-s), u, upper, 1e-18, 1e-13).unwrap();
        q.value + upper.powf(1.0 - 2.0 * s) / (2.0 * s - 1.0)
    }

    #[test]
    fn closed_form_at_s_one() {
        // ∫_u^∞ dx/(x²+1) = π/2 − atan(u)
        let k = PowerKernel::new(1.0).unwrap();
        for u in [0.0, 0.3, 1.0, 1.5, 7.0] {
            let exact = std::f64::consts::FRAC_PI_2 - f64::atan(u);
            let iv = k.tail(1.0, u).unwrap();
            assert!(iv.contains(exact), "{u}: {iv:?} vs {exact}");
            assert!(iv.width() < 1e-12);
        }
    }

    #[test]
    fn negative_delta_closed_form() {
        // ∫_u^∞ dx/(x²−1) = ½ ln((u+1)/(u−1))
        let k = PowerKernel::new(1.0).unwrap();
        for u in [1.1f64, 1.3, 2.0, 10.0] {
            let exact = 0.5 * ((u + 1.0) / (u - 1.0)).ln();
            let iv = k.tail(-1.0, u).unwrap();
            assert!((iv.mid() - exact).abs() < 1e-11 * exact, "{u}: {iv:?} vs {exact}");
        }
    }

    #[test]
    fn lattice_tail_matches_direct_sum() {
        let k = PowerKernel::new(2.0).unwrap();
        for (delta, u) in [(1.0, 0.5), (-0.125, 0.5), (30.0, 1.0), (0.0, 3.0)] {
            let direct: f64 = (0..2_000_000).map(|j| k.value(delta, u + j as f64)).sum::<f64>()
                + k.tail(delta, u + 2e6).unwrap().mid();
            let iv = k.lattice_tail(delta, u).unwrap();
            assert!(iv.contains(direct) || (iv.mid() - direct).abs() < 1e-13, "{delta} {u}: {iv:?} {direct}");
        }
    }

    #[test]
    fn power_sums() {
        let direct: f64 = (11..2_000_000u64).map(|n| (n as f64).powf(-2.5)).sum::<f64>();
        let iv = power_sum_tail(-2.5, 10);
        let rest = power_sum_tail(-2.5, 1_999_999);
        assert!(iv.lo <= direct + rest.hi && direct + rest.lo <= iv.hi);
    }

    #[test]
    fn rejects_bad_exponent() {
        assert!(PowerKernel::new(0.5).is_err());
        assert!(PowerKernel::new(2.0).unwrap().tail(-4.0, 1.0).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn prop_tail_encloses_quadrature(s in 0.8f64..3.0, delta in -2.0f64..40.0, du in 0.05f64..5.0) {
            let u = if delta < 0.0 { (-delta).sqrt() + du } else { du };
            let k = PowerKernel::new(s).unwrap();
            let iv = k.tail(delta, u).unwrap();
            let b = brute_tail(s, delta, u);
            prop_assert!((iv.mid() - b).abs() <= 1e-6 * b.abs() + iv.width(), "{:?} vs {}", iv, b);
        }
    }
}
