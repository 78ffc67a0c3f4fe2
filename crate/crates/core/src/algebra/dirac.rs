//! The family `D^t = Σ_a e^a ⊗ e_a + 3t ⊗ q(φ)` of Dirac operators and the
//! operators built from it and its formal adjoint.
//!
//! `t = 1/3` is the cubic Dirac operator; `t = 0` and `t = 1/2` are the other
//! two distinguished members of the family.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};

use super::clifford::{quantized_structure_tensor, CliffElement};
use super::envelope::{casimir, EnvElement};
use super::lie::{casimir_shift, dual_basis, LieBasisVector};
use super::number::{rat, AlgNumber};
use super::spin::SpinOperator;
use super::tensor::EnvCliff;

pub const T_NATURAL: Rational64 = Rational64::new_raw(0, 1);
pub const T_CUBIC: Rational64 = Rational64::new_raw(1, 3);
pub const T_HALF: Rational64 = Rational64::new_raw(1, 2);

pub fn param(t: &Rational64) -> AlgNumber {
    AlgNumber::from_rational(BigRational::new(BigInt::from(*t.numer()), BigInt::from(*t.denom())))
}

fn gen(v: LieBasisVector) -> EnvElement {
    EnvElement::generator(v)
}

fn scalar(num: i64, den: i64) -> AlgNumber {
    AlgNumber::from_rational(rat(num, den))
}

/// `D^t` as an element of `U(g) ⊗ Cl(g)`.
pub fn cubic_dirac_tensor(t: &Rational64) -> EnvCliff {
    let dual = dual_basis();
    let mut d = EnvCliff::zero();
    for v in LieBasisVector::ALL {
        d = &d + &EnvCliff::pure(&EnvElement::from_lie(&dual[v.index()]), &CliffElement::generator(v.index()));
    }
    let cubic = quantized_structure_tensor().scale(&(&param(t) * &AlgNumber::from_int(3)));
    &d + &EnvCliff::cliff(&cubic)
}

/// `D^t` in the spin representation.
pub fn cubic_dirac(t: &Rational64) -> SpinOperator {
    SpinOperator::from_tensor(&cubic_dirac_tensor(t))
}

/// The formal adjoint: conjugate transpose with `e_i ↦ −e_i` in every entry.
pub fn formal_adjoint(d: &SpinOperator) -> SpinOperator {
    d.adjoint()
}

/// `½(D E + E D)` with `E` the formal adjoint of `D^t`.
pub fn langle_squared(t: &Rational64) -> SpinOperator {
    let d = cubic_dirac(t);
    let e = formal_adjoint(&d);
    d.anticommutator(&e).scale(&scalar(1, 2))
}

/// `(i/2)(D² − E²)`.
pub fn r_operator(t: &Rational64) -> SpinOperator {
    let d = cubic_dirac(t);
    let e = formal_adjoint(&d);
    let diff = &(&d * &d) - &(&e * &e);
    diff.scale(&AlgNumber::gauss((0, 1), (1, 2)))
}

/// `(Re D, Im D) = (½(D + E), −(i/2)(D − E))`.
pub fn real_imag_parts(t: &Rational64) -> (SpinOperator, SpinOperator) {
    let d = cubic_dirac(t);
    let e = formal_adjoint(&d);
    let re = (&d + &e).scale(&scalar(1, 2));
    let im = (&d - &e).scale(&AlgNumber::gauss((0, 1), (-1, 2)));
    (re, im)
}

/// `(D^t)² − (Ω + Tr_ad(Ω)/24)·I`; vanishes exactly at `t = 1/3`.
pub fn dirac_square_identity(t: &Rational64) -> SpinOperator {
    let d = cubic_dirac(t);
    let shifted = &casimir() + &EnvElement::constant(casimir_shift());
    &(&d * &d) - &SpinOperator::scalar(&shifted)
}

/// Closed form `(½(−e1²−e2²−e3²) + 9t²/8) ⊗ 1 − ¼(1+3t) e3 ⊗ c(e1)c(e2)`.
pub fn langle_squared_closed_form(t: &Rational64) -> SpinOperator {
    let tt = param(t);
    let mut lap = EnvElement::zero();
    for v in LieBasisVector::ALL {
        lap = lap - &gen(v) * &gen(v);
    }
    let scalar_part = &lap.scale(&scalar(1, 2))
        + &EnvElement::constant(&(&tt * &tt) * &scalar(9, 8));
    let coeff = &(&AlgNumber::from_int(1) + &(&tt * &AlgNumber::from_int(3))) * &scalar(-1, 4);
    let cross = EnvCliff::pure(&gen(LieBasisVector::E3).scale(&coeff), &CliffElement::word(&[0, 1]));
    SpinOperator::from_tensor(&(&EnvCliff::env(&scalar_part) + &cross))
}

fn r_form(t: &Rational64, second_sign: i64) -> SpinOperator {
    let tt = param(t);
    let coeff = &(&AlgNumber::from_int(1) - &(&tt * &AlgNumber::from_int(3))) * &AlgNumber::gauss((0, 1), (1, 4));
    let first = EnvCliff::pure(&gen(LieBasisVector::E1), &CliffElement::word(&[1, 2]));
    let second = EnvCliff::pure(
        &gen(LieBasisVector::E2).scale(&AlgNumber::from_int(second_sign)),
        &CliffElement::word(&[0, 2]),
    );
    SpinOperator::from_tensor(&(&first + &second).scale(&coeff))
}

/// `(i/4)(1−3t)(e1 ⊗ c(e2)c(e3) − e2 ⊗ c(e1)c(e3))`, the value of `R_{D^t}`.
pub fn r_operator_closed_form(t: &Rational64) -> SpinOperator {
    r_form(t, -1)
}

/// `(i/4)(1−3t)(e1 ⊗ c(e2)c(e3) + e2 ⊗ c(e1)c(e3))`.
///
/// This is the reference statement with a `+` between the two terms. It agrees
/// with [`r_operator`] only at `t = 1/3`, where both sides vanish.
pub fn r_operator_reference_form(t: &Rational64) -> SpinOperator {
    r_form(t, 1)
}

fn ladder_antidiag(coeff: &AlgNumber) -> SpinOperator {
    let i = AlgNumber::i();
    let lower = &gen(LieBasisVector::E1) - &gen(LieBasisVector::E2).scale(&i);
    let raise = &gen(LieBasisVector::E1) + &gen(LieBasisVector::E2).scale(&i);
    SpinOperator([
        [EnvElement::zero(), lower.scale(coeff)],
        [raise.scale(coeff), EnvElement::zero()],
    ])
}

/// `{Re D^t, Im D^t} = (i/2)(1−3t)·antidiag(e1 − ie2, e1 + ie2)`.
pub fn anticommutator_closed_form(t: &Rational64) -> SpinOperator {
    let tt = param(t);
    let c = &(&AlgNumber::from_int(1) - &(&tt * &AlgNumber::from_int(3))) * &AlgNumber::gauss((0, 1), (1, 2));
    ladder_antidiag(&c)
}

/// `(3t−1)·antidiag(e1 − ie2, e1 + ie2)`, the reference statement for the
/// anticommutator. It differs from [`anticommutator_closed_form`] by the
/// constant factor `2i`.
pub fn anticommutator_reference_form(t: &Rational64) -> SpinOperator {
    let tt = param(t);
    ladder_antidiag(&(&(&tt * &AlgNumber::from_int(3)) - &AlgNumber::from_int(1)))
}

/// `[Re D, Im D]` at `t = 1/3` in the form `−(i/2)·antidiag({e1−ie2, −ie3}, −{e1+ie2, −ie3})`.
pub fn commutator_closed_form() -> SpinOperator {
    let i = AlgNumber::i();
    let h = gen(LieBasisVector::E3).scale(&-&i);
    let lower = &gen(LieBasisVector::E1) - &gen(LieBasisVector::E2).scale(&i);
    let raise = &gen(LieBasisVector::E1) + &gen(LieBasisVector::E2).scale(&i);
    let anti = |a: &EnvElement, b: &EnvElement| &(a * b) + &(b * a);
    let c = AlgNumber::gauss((0, 1), (-1, 2));
    SpinOperator([
        [EnvElement::zero(), anti(&lower, &h).scale(&c)],
        [(-anti(&raise, &h)).scale(&c), EnvElement::zero()],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt2_inv() -> AlgNumber {
        AlgNumber::sqrt2().scale(&rat(1, 2))
    }

    #[test]
    fn cubic_dirac_matrix() {
        // (1/√2)[[−ie3 + ½, e1 − ie2], [e1 + ie2, ie3 + ½]]
        let i = AlgNumber::i();
        let e1 = gen(LieBasisVector::E1);
        let e2 = gen(LieBasisVector::E2);
        let e3 = gen(LieBasisVector::E3);
        let half = EnvElement::constant(scalar(1, 2));
        let expect = SpinOperator([
            [&e3.scale(&-&i) + &half, &e1 - &e2.scale(&i)],
            [&e1 + &e2.scale(&i), &e3.scale(&i) + &half],
        ])
        .scale(&sqrt2_inv());
        assert_eq!(cubic_dirac(&T_CUBIC), expect);
    }

    #[test]
    fn adjoint_matrix() {
        let i = AlgNumber::i();
        let e1 = gen(LieBasisVector::E1);
        let e2 = gen(LieBasisVector::E2);
        let e3 = gen(LieBasisVector::E3);
        let half = EnvElement::constant(scalar(1, 2));
        let expect = SpinOperator([
            [&e3.scale(&-&i) + &half, -(&e1 - &e2.scale(&i))],
            [-(&e1 + &e2.scale(&i)), &e3.scale(&i) + &half],
        ])
        .scale(&sqrt2_inv());
        assert_eq!(formal_adjoint(&cubic_dirac(&T_CUBIC)), expect);
    }

    #[test]
    fn tensor_adjoint_agrees_with_matrix_adjoint() {
        for t in [T_NATURAL, T_CUBIC, T_HALF] {
            let d = cubic_dirac_tensor(&t);
            assert_eq!(SpinOperator::from_tensor(&d.adjoint()), cubic_dirac(&t).adjoint());
        }
    }

    #[test]
    fn square_of_cubic_dirac() {
        assert!(dirac_square_identity(&T_CUBIC).is_zero());
        assert!(!dirac_square_identity(&T_NATURAL).is_zero());
        assert!(!dirac_square_identity(&T_HALF).is_zero());
    }

    #[test]
    fn abstract_square_of_cubic_dirac() {
        let d = cubic_dirac_tensor(&T_CUBIC);
        let expect = EnvCliff::env(&(&casimir() + &EnvElement::constant(scalar(1, 8))));
        assert_eq!(&d * &d, expect);
    }

    #[test]
    fn r_vanishes_for_cubic() {
        assert!(r_operator(&T_CUBIC).is_zero());
        let d = cubic_dirac(&T_CUBIC);
        let e = formal_adjoint(&d);
        assert_eq!(&d * &d, &e * &e);
    }

    #[test]
    fn langle_family() {
        for t in [T_NATURAL, T_CUBIC, T_HALF, Rational64::new(2, 7)] {
            assert_eq!(langle_squared(&t), langle_squared_closed_form(&t));
        }
    }

    #[test]
    fn r_family_closed_form() {
        for t in [T_NATURAL, T_CUBIC, T_HALF, Rational64::new(-5, 3)] {
            assert_eq!(r_operator(&t), r_operator_closed_form(&t));
        }
    }

    #[test]
    fn r_reference_form_only_agrees_at_cubic() {
        assert_eq!(r_operator(&T_CUBIC), r_operator_reference_form(&T_CUBIC));
        assert_ne!(r_operator(&T_NATURAL), r_operator_reference_form(&T_NATURAL));
        assert_ne!(r_operator(&T_HALF), r_operator_reference_form(&T_HALF));
    }

    #[test]
    fn real_part_is_self_adjoint_and_parts_recombine() {
        for t in [T_NATURAL, T_CUBIC, T_HALF] {
            let (re, im) = real_imag_parts(&t);
            assert_eq!(re.adjoint(), re);
            assert_eq!(im.adjoint(), im);
            assert_eq!(&re + &im.scale(&AlgNumber::i()), cubic_dirac(&t));
        }
    }

    #[test]
    fn anticommutator_family() {
        let (re, im) = real_imag_parts(&T_CUBIC);
        assert!(re.anticommutator(&im).is_zero());
        for t in [T_NATURAL, T_HALF, Rational64::new(3, 5)] {
            let (re, im) = real_imag_parts(&t);
            let anti = re.anticommutator(&im);
            assert_eq!(anti, anticommutator_closed_form(&t));
            assert_eq!(anticommutator_reference_form(&t).scale(&AlgNumber::gauss((0, 1), (-1, 2))), anti);
        }
    }

    #[test]
    fn commutator_at_cubic() {
        let (re, im) = real_imag_parts(&T_CUBIC);
        assert_eq!(re.commutator(&im), commutator_closed_form());
    }

    #[test]
    fn real_part_matrix() {
        let (re, _) = real_imag_parts(&T_CUBIC);
        let i = AlgNumber::i();
        let e3 = gen(LieBasisVector::E3);
        let half = EnvElement::constant(scalar(1, 2));
        let expect = SpinOperator([
            [&e3.scale(&-&i) + &half, EnvElement::zero()],
            [EnvElement::zero(), &e3.scale(&i) + &half],
        ])
        .scale(&sqrt2_inv());
        assert_eq!(re, expect);
    }
}
