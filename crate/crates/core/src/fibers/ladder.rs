//! Ladder actions of `−ie3`, `e1 − ie2`, `e1 + ie2` on the weight bases of the
//! tempered representations, and their multiplicative extension to `U(g)`.
//!
//! Two realizations are provided. [`Numeric`] uses the orthonormal weight
//! basis, where discrete-series coefficients carry square roots. [`Exact`]
//! uses a rescaled basis in which every coefficient is polynomial in `m′`;
//! the two are related by a diagonal similarity, so diagonal bands of any
//! operator agree between them.

use std::sync::Arc;

use num_complex::Complex64;
use num_rational::BigRational;

use super::banded::{FiberOperator, FiberScalar, SpinFiberOperator};
use super::label::{DiscreteSign, FiberLabel};
use crate::algebra::envelope::EnvElement;
use crate::algebra::number::{rat, AlgNumber};
use crate::algebra::spin::SpinOperator;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderGenerator {
    /// `−ie3`, diagonal with value `m′`.
    Weight,
    /// `e1 − ie2`.
    Lower,
    /// `e1 + ie2`.
    Raise,
}

impl LadderGenerator {
    pub fn offset(self) -> i64 {
        match self {
            LadderGenerator::Weight => 0,
            LadderGenerator::Lower => -1,
            LadderGenerator::Raise => 1,
        }
    }
}

pub trait Realization {
    type Scalar: FiberScalar;
    fn ladder(generator: LadderGenerator, fiber: FiberLabel) -> FiberOperator<Self::Scalar>;
}

pub struct Numeric;
pub struct Exact;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl Realization for Numeric {
    type Scalar = Complex64;

    fn ladder(generator: LadderGenerator, fiber: FiberLabel) -> FiberOperator<Complex64> {
        let d = generator.offset();
        let w = move |m: i64| fiber.weight(m);
        let f: Arc<dyn Fn(i64) -> Complex64 + Send + Sync> = match (generator, fiber) {
            (LadderGenerator::Weight, _) => Arc::new(move |m| c(w(m))),
            (_, FiberLabel::Principal { rho, .. }) => {
                let tau = Complex64::new(-0.5, rho);
                match generator {
                    LadderGenerator::Lower => Arc::new(move |m| -(tau - w(m) + 1.0)),
                    _ => Arc::new(move |m| -(tau + w(m) + 1.0)),
                }
            }
            (_, FiberLabel::Discrete { sign, two_l }) => {
                let l = two_l as f64 / 2.0;
                let root = |x: f64| x.max(0.0).sqrt();
                match (sign, generator) {
                    (DiscreteSign::Negative, LadderGenerator::Lower) => {
                        Arc::new(move |m| c(-root((l - w(m) + 1.0) * (-l - w(m)))))
                    }
                    (DiscreteSign::Negative, _) => Arc::new(move |m| c(root((l - w(m)) * (-l - w(m) - 1.0)))),
                    (DiscreteSign::Positive, LadderGenerator::Lower) => {
                        Arc::new(move |m| c(root((l + w(m)) * (-l + w(m) - 1.0))))
                    }
                    (DiscreteSign::Positive, _) => Arc::new(move |m| c(-root((l + w(m) + 1.0) * (-l + w(m))))),
                }
            }
        };
        FiberOperator::band(fiber, d, move |m| f(m))
    }
}

impl Realization for Exact {
    type Scalar = AlgNumber;

    fn ladder(generator: LadderGenerator, fiber: FiberLabel) -> FiberOperator<AlgNumber> {
        let d = generator.offset();
        let w = move |m: i64| AlgNumber::from_rational(fiber.exact_weight(m));
        let one = AlgNumber::from_int(1);
        let f: Arc<dyn Fn(i64) -> AlgNumber + Send + Sync> = match (generator, fiber) {
            (LadderGenerator::Weight, _) => Arc::new(w),
            (_, FiberLabel::Principal { rho, .. }) => {
                let rho = BigRational::from_float(rho).expect("finite rho");
                let tau = AlgNumber::new(
                    crate::algebra::number::GaussRat::new(rat(-1, 2), rho),
                    Default::default(),
                );
                match generator {
                    LadderGenerator::Lower => Arc::new(move |m| -&(&(&tau - &w(m)) + &one)),
                    _ => Arc::new(move |m| -&(&(&tau + &w(m)) + &one)),
                }
            }
            (_, FiberLabel::Discrete { sign, two_l }) => {
                let l = AlgNumber::from_rational(rat(two_l, 2));
                match (sign, generator) {
                    (DiscreteSign::Negative, LadderGenerator::Lower) => Arc::new(move |_| -&one),
                    // (l − m′)(−l − m′ − 1)
                    (DiscreteSign::Negative, _) => Arc::new(move |m| {
                        let x = w(m);
                        &(&l - &x) * &(&(&-&l - &x) - &one)
                    }),
                    // (l + m′)(−l + m′ − 1)
                    (DiscreteSign::Positive, LadderGenerator::Lower) => Arc::new(move |m| {
                        let x = w(m);
                        &(&l + &x) * &(&(&x - &l) - &one)
                    }),
                    (DiscreteSign::Positive, _) => Arc::new(move |_| -&one),
                }
            }
        };
        FiberOperator::band(fiber, d, move |m| f(m))
    }
}

pub fn ladder_action(generator: LadderGenerator, fiber: FiberLabel) -> FiberOperator<Complex64> {
    Numeric::ladder(generator, fiber)
}

/// Fiber images of `e1 = ½(e₊ + e₋)`, `e2 = −(i/2)(e₊ − e₋)`, `e3 = i·(−ie3)`.
fn generators<R: Realization>(fiber: FiberLabel) -> [FiberOperator<R::Scalar>; 3] {
    let s = |x: AlgNumber| R::Scalar::from_alg(&x);
    let raise = R::ladder(LadderGenerator::Raise, fiber);
    let lower = R::ladder(LadderGenerator::Lower, fiber);
    let weight = R::ladder(LadderGenerator::Weight, fiber);
    let half = s(AlgNumber::from_rational(rat(1, 2)));
    let e1 = (&raise + &lower).scale(&half);
    let minus = &raise + &lower.scale(&s(AlgNumber::from_int(-1)));
    let e2 = minus.scale(&s(AlgNumber::gauss((0, 1), (-1, 2))));
    let e3 = weight.scale(&s(AlgNumber::i()));
    [e1, e2, e3]
}

/// The action of an element of `U(g)` on a fiber.
pub fn env_to_fiber_in<R: Realization>(x: &EnvElement, fiber: FiberLabel) -> FiberOperator<R::Scalar> {
    let gens = generators::<R>(fiber);
    let mut out = FiberOperator::zero(fiber);
    for (mono, coeff) in x.terms() {
        let mut term = FiberOperator::scalar(fiber, R::Scalar::from_alg(coeff));
        for (g, &power) in gens.iter().zip(mono.iter()) {
            for _ in 0..power {
                term = &term * g;
            }
        }
        out = &out + &term;
    }
    out
}

pub fn env_to_fiber(x: &EnvElement, fiber: FiberLabel) -> FiberOperator<Complex64> {
    env_to_fiber_in::<Numeric>(x, fiber)
}

pub fn env_to_fiber_exact(x: &EnvElement, fiber: FiberLabel) -> FiberOperator<AlgNumber> {
    env_to_fiber_in::<Exact>(x, fiber)
}

pub fn spin_to_fiber_in<R: Realization>(op: &SpinOperator, fiber: FiberLabel) -> SpinFiberOperator<R::Scalar> {
    SpinFiberOperator {
        blocks: std::array::from_fn(|i| std::array::from_fn(|j| env_to_fiber_in::<R>(op.entry(i, j), fiber))),
    }
}

pub fn spin_to_fiber(op: &SpinOperator, fiber: FiberLabel) -> SpinFiberOperator<Complex64> {
    spin_to_fiber_in::<Numeric>(op, fiber)
}

pub fn spin_to_fiber_exact(op: &SpinOperator, fiber: FiberLabel) -> SpinFiberOperator<AlgNumber> {
    spin_to_fiber_in::<Exact>(op, fiber)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::envelope::casimir;
    use crate::algebra::lie::LieBasisVector;
    use crate::fibers::label::Parity;
    use proptest::prelude::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    fn sample_fibers() -> Vec<FiberLabel> {
        let mut v = vec![
            FiberLabel::principal(0.0, Parity::Zero).unwrap(),
            FiberLabel::principal(0.5, Parity::Half).unwrap(),
            FiberLabel::principal(5.0, Parity::Zero).unwrap(),
        ];
        for two_l in [-1, -2, -3, -4, -7] {
            v.push(FiberLabel::negative(two_l));
            v.push(FiberLabel::positive(two_l));
        }
        v
    }

    fn window(f: FiberLabel) -> (i64, i64) {
        f.clip(-12, 12).unwrap()
    }

    #[test]
    fn raise_vanishes_at_top_of_negative_series() {
        for two_l in -6..0 {
            let f = FiberLabel::negative(two_l);
            let top = f.support().1.unwrap();
            let raw = (two_l as f64 / 2.0 - f.weight(top)) * (-(two_l as f64) / 2.0 - f.weight(top) - 1.0);
            assert_eq!(raw, 0.0);
            assert_eq!(ladder_action(LadderGenerator::Raise, f).entry(1, top), Complex64::new(0.0, 0.0));
            assert!(ladder_action(LadderGenerator::Raise, f).entry(1, top - 1).norm() > 0.0);
        }
    }

    #[test]
    fn lower_vanishes_at_bottom_of_positive_series() {
        for two_l in -6..0 {
            let f = FiberLabel::positive(two_l);
            let bottom = f.support().0.unwrap();
            assert_eq!(f.weight(bottom), -(two_l as f64) / 2.0);
            let exact = Exact::ladder(LadderGenerator::Lower, f);
            let w = f.weight(bottom);
            let l = two_l as f64 / 2.0;
            assert_eq!((l + w) * (-l + w - 1.0), 0.0);
            assert!(FiberScalar::is_zero(&exact.entry(-1, bottom)));
        }
    }

    #[test]
    fn principal_ladder_coefficients() {
        let f = FiberLabel::principal(2.0, Parity::Half).unwrap();
        let tau = Complex64::new(-0.5, 2.0);
        let w = f.weight(3);
        assert_eq!(ladder_action(LadderGenerator::Weight, f).entry(0, 3), c(w));
        assert_eq!(ladder_action(LadderGenerator::Lower, f).entry(-1, 3), -(tau - w + 1.0));
        assert_eq!(ladder_action(LadderGenerator::Raise, f).entry(1, 3), -(tau + w + 1.0));
    }

    #[test]
    fn weight_commutator_of_ladders() {
        // [e₊, e₋] acts as 2m′
        for f in sample_fibers() {
            let r = ladder_action(LadderGenerator::Raise, f);
            let l = ladder_action(LadderGenerator::Lower, f);
            let comm = &(&r * &l) + &(&l * &r).scale(&c(-1.0));
            let (lo, hi) = window(f);
            for m in lo..=hi {
                assert!(close(comm.entry(0, m), c(2.0 * f.weight(m)), 1e-12), "{f} m={m}");
            }
        }
    }

    #[test]
    fn casimir_is_scalar_on_fibers() {
        let om = casimir();
        for f in sample_fibers() {
            let op = env_to_fiber(&om, f);
            let (lo, hi) = window(f);
            assert!(op.is_diagonal_on(lo, hi));
            for m in lo..=hi {
                assert!(close(op.entry(0, m), c(f.casimir_value()), 1e-12), "{f} m={m}");
            }
            let exact = env_to_fiber_exact(&om, f);
            for d in exact.offsets().filter(|&d| d != 0) {
                for m in lo..=hi {
                    assert!(FiberScalar::is_zero(&exact.entry(d, m)));
                }
            }
        }
    }

    #[test]
    fn exact_and_numeric_diagonals_agree() {
        let e = |v| EnvElement::generator(v);
        let x = &(&e(LieBasisVector::E1) * &e(LieBasisVector::E1)) + &(&e(LieBasisVector::E2) * &e(LieBasisVector::E3));
        for f in sample_fibers() {
            let a = env_to_fiber(&x, f);
            let b = env_to_fiber_exact(&x, f);
            let (lo, hi) = window(f);
            for m in lo..=hi {
                assert!(close(a.entry(0, m), b.entry(0, m).to_complex(), 1e-12));
            }
        }
    }

    fn small_env() -> impl Strategy<Value = EnvElement> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), -3i64..4, -3i64..4), 1..4).prop_map(|terms| {
            let mut x = EnvElement::zero();
            for ((a, b, c), re, im) in terms {
                x.add_term([a, b, c], &AlgNumber::gauss((re, 1), (im, 2)));
            }
            x
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn prop_exact_homomorphism(x in small_env(), y in small_env(), idx in 0usize..13) {
            let f = sample_fibers()[idx];
            let lhs = env_to_fiber_exact(&(&x * &y), f);
            let rhs = &env_to_fiber_exact(&x, f) * &env_to_fiber_exact(&y, f);
            let (lo, hi) = f.clip(-6, 6).unwrap();
            for d in -8..=8 {
                for m in lo..=hi {
                    prop_assert_eq!(lhs.entry(d, m), rhs.entry(d, m));
                }
            }
        }
    }
}
