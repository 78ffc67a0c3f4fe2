//! The real form su(1,1) with basis `e1, e2, e3`.
//!
//! Brackets: `[e1,e2] = e3`, `[e2,e3] = −e1`, `[e3,e1] = −e2`.
//! The Killing form is `diag(2, 2, −2)` in this basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::number::{rat, AlgNumber};

pub const DIM: usize = 3;

/// A basis vector of su(1,1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LieBasisVector {
    E1,
    E2,
    E3,
}

impl LieBasisVector {
    pub const ALL: [LieBasisVector; 3] = [Self::E1, Self::E2, Self::E3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }
}

impl fmt::Display for LieBasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.index() + 1)
    }
}

/// `[e_i, e_j] = Σ_k C[i][j][k] e_k`.
pub const STRUCTURE: [[[i64; 3]; 3]; 3] = [
    [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
    [[0, 0, -1], [0, 0, 0], [-1, 0, 0]],
    [[0, -1, 0], [1, 0, 0], [0, 0, 0]],
];

/// An element `Σ c_i e_i` of the complexified algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LieElement(pub [AlgNumber; 3]);

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(v: LieBasisVector) -> Self {
        let mut c: [AlgNumber; 3] = Default::default();
        c[v.index()] = AlgNumber::one();
        Self(c)
    }

    pub fn from_ints(c: [i64; 3]) -> Self {
        Self(c.map(AlgNumber::from_int))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &AlgNumber) -> Self {
        Self(std::array::from_fn(|i| s * &self.0[i]))
    }

    pub fn bracket(&self, o: &Self) -> Self {
        let mut out: [AlgNumber; 3] = Default::default();
        for i in 0..DIM {
            for j in 0..DIM {
                if self.0[i].is_zero() || o.0[j].is_zero() {
                    continue;
                }
                let p = &self.0[i] * &o.0[j];
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = STRUCTURE[i][j][k];
                    if c != 0 {
                        *slot += &(&p * &AlgNumber::from_int(c));
                    }
                }
            }
        }
        Self(out)
    }

    /// Matrix of `ad x` acting on coordinate columns.
    pub fn ad(&self) -> [[AlgNumber; 3]; 3] {
        let mut m: [[AlgNumber; 3]; 3] = Default::default();
        for j in 0..DIM {
            let col = self.bracket(&LieElement::basis(LieBasisVector::from_index(j)));
            for i in 0..DIM {
                m[i][j] = col.0[i].clone();
            }
        }
        m
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, o: &LieElement) -> LieElement {
        LieElement(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, o: &LieElement) -> LieElement {
        LieElement(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        LieElement(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl Mul<&LieElement> for &AlgNumber {
    type Output = LieElement;
    fn mul(self, x: &LieElement) -> LieElement {
        x.scale(self)
    }
}

pub type Matrix3 = [[AlgNumber; 3]; 3];

pub fn mat_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..DIM).fold(AlgNumber::zero(), |acc, k| acc + &a[i][k] * &b[k][j])
        })
    })
}

pub fn trace(a: &Matrix3) -> AlgNumber {
    (0..DIM).fold(AlgNumber::zero(), |acc, i| acc + &a[i][i])
}

/// `B(x, y) = Tr(ad x ∘ ad y)`.
pub fn killing_form(x: &LieElement, y: &LieElement) -> AlgNumber {
    trace(&mat_mul(&x.ad(), &y.ad()))
}

/// Gram matrix of the Killing form on the basis.
pub fn killing_matrix() -> Matrix3 {
    static GRAM: OnceLock<Matrix3> = OnceLock::new();
    GRAM.get_or_init(compute_killing_matrix).clone()
}

fn compute_killing_matrix() -> Matrix3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            killing_form(
                &LieElement::basis(LieBasisVector::from_index(i)),
                &LieElement::basis(LieBasisVector::from_index(j)),
            )
        })
    })
}

/// The basis `e^a` with `B(e^a, e_b) = δ_ab`.
pub fn dual_basis() -> [LieElement; 3] {
    let g = killing_matrix();
    std::array::from_fn(|a| {
        let mut c: [AlgNumber; 3] = Default::default();
        // The Gram matrix is diagonal for this basis.
        c[a] = g[a][a].inv().expect("Killing form is nondegenerate");
        LieElement(c)
    })
}

/// `Tr_ad(Ω) = Σ_a Tr(ad e^a ad e_a)`; equals the dimension for a nondegenerate form.
pub fn casimir_trace_ad() -> AlgNumber {
    let dual = dual_basis();
    (0..DIM).fold(AlgNumber::zero(), |acc, a| {
        acc + trace(&mat_mul(
            &dual[a].ad(),
            &LieElement::basis(LieBasisVector::from_index(a)).ad(),
        ))
    })
}

/// The constant `Tr_ad(Ω)/24` that appears in the square of the cubic Dirac operator.
pub fn casimir_shift() -> AlgNumber {
    casimir_trace_ad().scale(&rat(1, 24))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use LieBasisVector::*;

    fn e(v: LieBasisVector) -> LieElement {
        LieElement::basis(v)
    }

    fn arb_lie() -> impl Strategy<Value = LieElement> {
        proptest::array::uniform3(-9i64..9).prop_map(LieElement::from_ints)
    }

    #[test]
    fn bracket_table() {
        assert_eq!(e(E1).bracket(&e(E2)), e(E3));
        assert_eq!(e(E2).bracket(&e(E3)), -&e(E1));
        assert_eq!(e(E3).bracket(&e(E1)), -&e(E2));
    }

    #[test]
    fn killing_values() {
        assert_eq!(killing_form(&e(E1), &e(E1)), AlgNumber::from_int(2));
        assert_eq!(killing_form(&e(E2), &e(E2)), AlgNumber::from_int(2));
        assert_eq!(killing_form(&e(E3), &e(E3)), AlgNumber::from_int(-2));
        assert!(killing_form(&e(E1), &e(E3)).is_zero());
        assert!(killing_form(&e(E2), &e(E3)).is_zero());
        assert!(killing_form(&e(E1), &e(E2)).is_zero());
    }

    #[test]
    fn dual_basis_values() {
        let d = dual_basis();
        let half = AlgNumber::from_rational(rat(1, 2));
        assert_eq!(d[0], e(E1).scale(&half));
        assert_eq!(d[1], e(E2).scale(&half));
        assert_eq!(d[2], e(E3).scale(&-&half));
        for a in 0..3 {
            for b in 0..3 {
                let expect = if a == b { AlgNumber::one() } else { AlgNumber::zero() };
                assert_eq!(killing_form(&d[a], &e(LieBasisVector::from_index(b))), expect);
            }
        }
    }

    #[test]
    fn casimir_trace_is_three() {
        assert_eq!(casimir_trace_ad(), AlgNumber::from_int(3));
        assert_eq!(casimir_shift(), AlgNumber::from_rational(rat(1, 8)));
    }

    proptest! {
        #[test]
        fn prop_jacobi(x in arb_lie(), y in arb_lie(), z in arb_lie()) {
            let s = &(&x.bracket(&y.bracket(&z)) + &y.bracket(&z.bracket(&x))) + &z.bracket(&x.bracket(&y));
            prop_assert!(s.is_zero());
        }

        #[test]
        fn prop_antisymmetric(x in arb_lie(), y in arb_lie()) {
            prop_assert_eq!(x.bracket(&y), -&y.bracket(&x));
        }

        #[test]
        fn prop_killing_invariant(x in arb_lie(), y in arb_lie(), z in arb_lie()) {
            let lhs = killing_form(&x.bracket(&y), &z);
            let rhs = killing_form(&x, &y.bracket(&z));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
