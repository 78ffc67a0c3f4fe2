//! The principal-series contribution
//! `Σ_ε ∫_0^∞ Σ_m (½ρ² + m′(m′±1) + ¼ + c)^{−q/2} ρ·w_ε(ρ) dρ`
//! with `w_0 = tanh πρ`, `w_½ = coth πρ` and `c = shift − ⅛`.
//!
//! Writing `v = m′ ± ½` and `a = v² + c`, each term splits as
//! `∫ρ(½ρ²+a)^{−s} = a^{1−s}/(s−1)` plus `σ·C(a)`, where
//! `C(a) = ∫ g(ρ)(½ρ²+a)^{−s}` with `g = 2ρ/(e^{2πρ} ± 1)` decaying
//! exponentially, `σ = −1` for `ε = 0` and `σ = +1` for `ε = ½`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::interval::{Interval, IntervalSum};
use super::quadrature::integrate;
use super::tails::PowerKernel;
use super::{Component, SeriesEnclosure, SeriesError};
use crate::fibers::Parity;

/// Cut between the quadrature region and the exponential tail of `g`.
const RHO_MAX: f64 = 12.0;
/// Beyond this `|v|`, `C(a)` is bracketed instead of integrated.
const EXPLICIT_CORRECTION: i64 = 200;
/// `ρ` at which `(½ρ² + a)^{−s} ≥ (a + ½R²)^{−s}` is used for the lower bracket.
const BRACKET_RHO: f64 = 5.0;

fn g(eps: Parity, rho: f64) -> f64 {
    if rho == 0.0 {
        return match eps {
            Parity::Zero => 0.0,
            Parity::Half => 1.0 / PI,
        };
    }
    let x = 2.0 * PI * rho;
    match eps {
        Parity::Zero => 2.0 * rho / (x.exp() + 1.0),
        Parity::Half => 2.0 * rho / x.exp_m1(),
    }
}

/// `∫_0^∞ g`: `1/24` for `tanh`, `1/12` for `coth`.
fn g_total(eps: Parity) -> f64 {
    match eps {
        Parity::Zero => 1.0 / 24.0,
        Parity::Half => 1.0 / 12.0,
    }
}

/// Upper bound for `∫_R^∞ g`.
fn g_tail(r: f64) -> f64 {
    let e = (-2.0 * PI * r).exp();
    2.0 * e * (r / (2.0 * PI) + 1.0 / (4.0 * PI * PI)) / (1.0 - e)
}

fn sigma(eps: Parity) -> f64 {
    match eps {
        Parity::Zero => -1.0,
        Parity::Half => 1.0,
    }
}

/// `C(a)` with its quadrature error estimate.
pub fn correction(eps: Parity, s: f64, a: f64) -> Result<(Interval, f64), SeriesError> {
    let f = |rho: f64| g(eps, rho) * (0.5 * rho * rho + a).powf(-s);
    let q1 = integrate(f, 0.0, 1.0, 1e-300, 1e-14)?;
    let q2 = integrate(f, 1.0, RHO_MAX, 1e-300, 1e-14)?;
    let err = q1.error + q2.error;
    let v = q1.value + q2.value;
    let tail = a.powf(-s) * g_tail(RHO_MAX);
    Ok((Interval::new(v - err, v + err + tail).pad(1e-15), err))
}

/// `v`-values `v = m + ε ± ½` with `|v| < cut`, in increasing order, together
/// with the first excluded `|v|` on each side.
fn lattice(eps: Parity, component: Component, cut: i64) -> (Vec<f64>, f64, f64) {
    let offset = eps.value() + component.offset();
    let mut vs = Vec::new();
    for m in (-cut - 2)..=(cut + 2) {
        let v = m as f64 + offset;
        if v.abs() < cut as f64 {
            vs.push(v);
        }
    }
    let first = vs.first().copied().unwrap_or(0.0);
    let last = vs.last().copied().unwrap_or(0.0);
    (vs, last + 1.0, -(first - 1.0))
}

/// Both-sided lattice sum with explicit terms and kernel tails beyond `cut`.
fn lattice_sum(
    eps: Parity,
    component: Component,
    cut: i64,
    mut explicit: impl FnMut(f64) -> Result<Interval, SeriesError>,
    tail: impl Fn(f64) -> Result<Interval, SeriesError>,
) -> Result<(Interval, u64), SeriesError> {
    let (vs, right, left) = lattice(eps, component, cut);
    let mut total = IntervalSum::new();
    for &v in &vs {
        total.push(explicit(v)?);
    }
    total.push(tail(right)?);
    total.push(tail(left)?);
    Ok((total.total(), vs.len() as u64 + 2))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrincipalSeries {
    pub by_parity: Vec<(f64, SeriesEnclosure)>,
    pub total: SeriesEnclosure,
    /// Largest quadrature error estimate relative to the corresponding `C(a)`.
    pub max_quadrature_ratio: f64,
}

fn check(q: f64, shift: f64) -> Result<(f64, f64), SeriesError> {
    if !(q > 3.0) {
        return Err(SeriesError::NotCertifiable { q });
    }
    let c = shift - 0.125;
    if !(c > 0.0) {
        return Err(SeriesError::InvalidParameter(format!("shift {shift} must exceed 1/8")));
    }
    Ok((0.5 * q, c))
}

fn explicit_cut(budget: u64) -> i64 {
    ((budget / 4) as i64).max(EXPLICIT_CORRECTION)
}

/// Certified enclosure of the `ε`-part of the principal series.
pub fn principal_part(
    q: f64,
    eps: Parity,
    component: Component,
    shift: f64,
    budget: u64,
) -> Result<(SeriesEnclosure, f64), SeriesError> {
    let (s, c) = check(q, shift)?;
    let main_kernel = PowerKernel::new(s - 1.0)?;
    let kernel = PowerKernel::new(s)?;
    let cut = explicit_cut(budget);

    let (main, n_main) = lattice_sum(
        eps,
        component,
        cut,
        |v| Ok(Interval::point((v * v + c).powf(1.0 - s) / (s - 1.0)).pad(4.0 * f64::EPSILON)),
        |v0| Ok(main_kernel.lattice_tail(c, v0)? * (1.0 / (s - 1.0))),
    )?;

    let mut worst = 0.0f64;
    let total_g = g_total(eps);
    let bracket_shift = 0.5 * BRACKET_RHO * BRACKET_RHO;
    let (corr, n_corr) = lattice_sum(
        eps,
        component,
        EXPLICIT_CORRECTION,
        |v| {
            let (iv, err) = correction(eps, s, v * v + c)?;
            worst = worst.max(err / iv.lo.abs().max(f64::MIN_POSITIVE));
            Ok(iv)
        },
        |v0| {
            let hi = kernel.lattice_tail(c, v0)?.hi * total_g;
            let lo = kernel.lattice_tail(c + bracket_shift, v0)?.lo * (total_g - g_tail(BRACKET_RHO));
            Ok(Interval::new(lo, hi))
        },
    )?;

    let value = main + corr * sigma(eps);
    Ok((SeriesEnclosure::new(value, n_main + n_corr, q)?, worst))
}

/// `S^χ_±`: both parities summed.
pub fn series_principal(q: f64, component: Component, shift: f64, budget: u64) -> Result<PrincipalSeries, SeriesError> {
    let mut by_parity = Vec::new();
    let mut total = Interval::zero();
    let mut terms = 0;
    let mut worst = 0.0f64;
    for eps in [Parity::Zero, Parity::Half] {
        let (e, w) = principal_part(q, eps, component, shift, budget)?;
        total = total + e.interval();
        terms += e.terms_used;
        worst = worst.max(w);
        by_parity.push((eps.value(), e));
    }
    Ok(PrincipalSeries { by_parity, total: SeriesEnclosure::new(total, terms, q)?, max_quadrature_ratio: worst })
}

/// The bracketing sums obtained by bounding `tanh` and `coth` on `[0,1]` and `[1,∞)`:
/// `ε = 0`: `Σ(a+½)^{1−s}/(q−2) ≤ · ≤ Σ a^{1−s}/(s−1)`;
/// `ε = ½`: `Σ a^{1−s}/(s−1) ≤ · ≤ Σ[∫_0^1(½ρ²+a)^{−s} + 2(a+½)^{1−s}/(s−1)]`.
pub fn principal_reference_bounds(q: f64, shift: f64, budget: u64) -> Result<Interval, SeriesError> {
    let (s, c) = check(q, shift)?;
    let main_kernel = PowerKernel::new(s - 1.0)?;
    let kernel = PowerKernel::new(s)?;
    let cut = explicit_cut(budget);
    let comp = Component::Plus;
    let power_sum = |delta: f64, eps: Parity| {
        lattice_sum(
            eps,
            comp,
            cut,
            |v| Ok(Interval::point((v * v + delta).powf(1.0 - s))),
            |v0| main_kernel.lattice_tail(delta, v0),
        )
        .map(|r| r.0)
    };
    let lower0 = power_sum(c + 0.5, Parity::Zero)? * (1.0 / (q - 2.0));
    let upper0 = power_sum(c, Parity::Zero)? * (1.0 / (s - 1.0));
    let lower_half = power_sum(c, Parity::Half)? * (1.0 / (s - 1.0));
    let (head, _) = lattice_sum(
        Parity::Half,
        comp,
        EXPLICIT_CORRECTION,
        |v| {
            let a = v * v + c;
            let r = integrate(|rho| (0.5 * rho * rho + a).powf(-s), 0.0, 1.0, 1e-300, 1e-14)?;
            Ok(Interval::around(r.value, r.error))
        },
        |v0| Ok(Interval::new(kernel.lattice_tail(c + 0.5, v0)?.lo, kernel.lattice_tail(c, v0)?.hi)),
    )?;
    let upper_half = head + power_sum(c + 0.5, Parity::Half)? * (2.0 / (s - 1.0));
    Ok(Interval::new(lower0.lo + lower_half.lo, upper0.hi + upper_half.hi))
}

/// Partial sum over `|v| < V`, `ρ ≤ V` with `V = budget/4`; valid for every `q > 0`.
pub fn principal_partial_sum(q: f64, component: Component, shift: f64, budget: u64) -> Result<(f64, u64), SeriesError> {
    let s = 0.5 * q;
    let c = shift - 0.125;
    let cut = ((budget / 4) as i64).max(1);
    let p = cut as f64;
    let mut total = 0.0;
    let mut count = 0;
    for eps in [Parity::Zero, Parity::Half] {
        let (vs, _, _) = lattice(eps, component, cut);
        for v in vs {
            let a = v * v + c;
            let main = if (s - 1.0).abs() < 1e-12 {
                ((a + 0.5 * p * p) / a).ln()
            } else {
                (a.powf(1.0 - s) - (a + 0.5 * p * p).powf(1.0 - s)) / (s - 1.0)
            };
            let corr = if v.abs() < EXPLICIT_CORRECTION as f64 {
                correction(eps, s, a)?.0.mid()
            } else {
                a.powf(-s) * g_total(eps)
            };
            total += main + sigma(eps) * corr;
            count += 1;
        }
    }
    Ok((total, count))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_limits() {
        assert_eq!(g(Parity::Half, 0.0), 1.0 / PI);
        assert!((g(Parity::Half, 1e-9) - 1.0 / PI).abs() < 1e-8);
        assert_eq!(g(Parity::Zero, 0.0), 0.0);
    }

    #[test]
    fn g_totals_match_quadrature() {
        for eps in [Parity::Zero, Parity::Half] {
            let q = integrate(|r| g(eps, r), 0.0, 20.0, 1e-16, 1e-14).unwrap();
            assert!((q.value - g_total(eps)).abs() < 1e-12, "{eps:?} {}", q.value);
        }
    }

    #[test]
    fn brute_force_rho_integral() {
        // Full integrand ρ·tanh(πρ)(½ρ² + a)^{−s} against the split form.
        let (s, a) = (2.0, 1.25);
        let full = integrate(|r| r * (PI * r).tanh() * (0.5 * r * r + a).powf(-s), 0.0, 400.0, 1e-16, 1e-13).unwrap();
        let tail = (a + 0.5 * 400.0f64.powi(2)).powf(1.0 - s) / (s - 1.0);
        let split = a.powf(1.0 - s) / (s - 1.0) - correction(Parity::Zero, s, a).unwrap().0.mid();
        assert!((full.value + tail - split).abs() < 1e-10);
    }

    #[test]
    fn components_agree() {
        let p = series_principal(4.0, Component::Plus, 1.125, 4_000).unwrap();
        let m = series_principal(4.0, Component::Minus, 1.125, 4_000).unwrap();
        assert!((p.total.lower - m.total.lower).abs() < 1e-12);
        assert!((p.total.upper - m.total.upper).abs() < 1e-12);
    }

    #[test]
    fn enclosure_matches_direct_quadrature() {
        // Σ_m ∫ ρ w_ε(ρ) (½ρ² + m′(m′+1) + 5/4)^{−3} dρ for |m| ≤ 300 at q = 6.
        let s = 3.0;
        for eps in [Parity::Zero, Parity::Half] {
            let w = |r: f64| match eps {
                Parity::Zero => r * (PI * r).tanh(),
                Parity::Half if r == 0.0 => 1.0 / PI,
                Parity::Half => r / (PI * r).tanh(),
            };
            let mut direct = 0.0;
            for m in -300..=300 {
                let mp = m as f64 + eps.value();
                let a = mp * (mp + 1.0) + 1.25;
                let f = |r: f64| w(r) * (0.5 * r * r + a).powf(-s);
                direct += integrate(f, 0.0, 1.0, 1e-300, 1e-13).unwrap().value
                    + integrate(f, 1.0, 200.0, 1e-300, 1e-13).unwrap().value;
            }
            let (e, _) = principal_part(6.0, eps, Component::Plus, 1.125, 10_000).unwrap();
            assert!(direct <= e.upper && direct + 1e-6 >= e.lower, "{eps:?}: {direct} vs {e:?}");
        }
    }
}
