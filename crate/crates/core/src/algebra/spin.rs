//! 2×2 matrices over `U(g)` acting on `C^∞ ⊗ C²`, and the spin representation
//! of the Clifford algebra.
//!
//! The Clifford generators act by `c(e1) = √2 σ1`, `c(e2) = √2 σ2`,
//! `c(e3) = √2 i σ3`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::clifford::{blade_indices, CliffElement};
use super::envelope::EnvElement;
use super::number::AlgNumber;
use super::tensor::EnvCliff;

pub type SpinMatrix = [[AlgNumber; 2]; 2];

fn mat_mul(a: &SpinMatrix, b: &SpinMatrix) -> SpinMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j]))
}

fn identity() -> SpinMatrix {
    [[AlgNumber::one(), AlgNumber::zero()], [AlgNumber::zero(), AlgNumber::one()]]
}

/// The image of a generator `e_i` in the spin representation.
pub fn gamma(i: usize) -> SpinMatrix {
    let r = AlgNumber::sqrt2();
    let ir = &AlgNumber::i() * &r;
    let z = AlgNumber::zero();
    match i {
        0 => [[z.clone(), r.clone()], [r, z]],
        1 => [[z.clone(), -&ir], [ir, z]],
        2 => [[ir.clone(), z.clone()], [z, -&ir]],
        _ => panic!("generator index out of range: {i}"),
    }
}

/// The spin representation `c: Cl(g) → M₂(C)`.
pub fn clifford_to_spin(c: &CliffElement) -> SpinMatrix {
    let mut out: SpinMatrix = Default::default();
    for (b, k) in c.terms() {
        let m = blade_indices(*b).into_iter().fold(identity(), |acc, i| mat_mul(&acc, &gamma(i)));
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] += &(k * &m[i][j]);
            }
        }
    }
    out
}

/// A 2×2 matrix with entries in `U(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SpinOperator(pub [[EnvElement; 2]; 2]);

impl SpinOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(x: &EnvElement) -> Self {
        Self([[x.clone(), EnvElement::zero()], [EnvElement::zero(), x.clone()]])
    }

    pub fn identity() -> Self {
        Self::scalar(&EnvElement::one())
    }

    pub fn from_tensor(x: &EnvCliff) -> Self {
        let mut out = Self::zero();
        for (b, u) in x.terms() {
            let m = clifford_to_spin(&CliffElement::blade(*b, AlgNumber::one()));
            for i in 0..2 {
                for j in 0..2 {
                    out.0[i][j] = &out.0[i][j] + &u.scale(&m[i][j]);
                }
            }
        }
        out
    }

    pub fn entry(&self, i: usize, j: usize) -> &EnvElement {
        &self.0[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(EnvElement::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.0[0][1].is_zero() && self.0[1][0].is_zero()
    }

    pub fn scale(&self, s: &AlgNumber) -> Self {
        Self(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].scale(s))))
    }

    /// Conjugate transpose composed with the entrywise adjoint of `U(g)`.
    pub fn adjoint(&self) -> Self {
        Self(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i].adjoint())))
    }

    pub fn anticommutator(&self, o: &Self) -> Self {
        &(self * o) + &(o * self)
    }

    pub fn commutator(&self, o: &Self) -> Self {
        &(self * o) - &(o * self)
    }
}

impl Add for &SpinOperator {
    type Output = SpinOperator;
    fn add(self, o: &SpinOperator) -> SpinOperator {
        SpinOperator(std::array::from_fn(|i| std::array::from_fn(|j| &self.0[i][j] + &o.0[i][j])))
    }
}

impl Sub for &SpinOperator {
    type Output = SpinOperator;
    fn sub(self, o: &SpinOperator) -> SpinOperator {
        SpinOperator(std::array::from_fn(|i| std::array::from_fn(|j| &self.0[i][j] - &o.0[i][j])))
    }
}

impl Neg for &SpinOperator {
    type Output = SpinOperator;
    fn neg(self) -> SpinOperator {
        SpinOperator(std::array::from_fn(|i| std::array::from_fn(|j| -&self.0[i][j])))
    }
}

impl Mul for &SpinOperator {
    type Output = SpinOperator;
    fn mul(self, o: &SpinOperator) -> SpinOperator {
        SpinOperator(std::array::from_fn(|i| {
            std::array::from_fn(|j| &(&self.0[i][0] * &o.0[0][j]) + &(&self.0[i][1] * &o.0[1][j]))
        }))
    }
}

impl fmt::Display for SpinOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.0[0][0], self.0[0][1], self.0[1][0], self.0[1][1]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lie::killing_matrix;

    #[test]
    fn spin_rep_respects_clifford_relations() {
        let b = killing_matrix();
        for i in 0..3 {
            for j in 0..3 {
                let gi = gamma(i);
                let gj = gamma(j);
                let p = mat_mul(&gi, &gj);
                let q = mat_mul(&gj, &gi);
                for r in 0..2 {
                    for s in 0..2 {
                        let lhs = &p[r][s] + &q[r][s];
                        let rhs = if r == s { &b[i][j] * &AlgNumber::from_int(2) } else { AlgNumber::zero() };
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn spin_rep_is_multiplicative_on_blades() {
        for s in 0u8..8 {
            for t in 0u8..8 {
                let cs = CliffElement::blade(s, AlgNumber::one());
                let ct = CliffElement::blade(t, AlgNumber::one());
                assert_eq!(
                    clifford_to_spin(&(&cs * &ct)),
                    mat_mul(&clifford_to_spin(&cs), &clifford_to_spin(&ct))
                );
            }
        }
    }

    #[test]
    fn spin_rep_intertwines_adjoints() {
        for s in 0u8..8 {
            let c = CliffElement::blade(s, AlgNumber::gauss((1, 1), (2, 1)));
            let m = clifford_to_spin(&c);
            let dag: SpinMatrix = std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].conj()));
            assert_eq!(clifford_to_spin(&c.adjoint()), dag);
        }
    }

    #[test]
    fn top_element_is_scalar() {
        // c(e1) c(e2) c(e3) = −2√2 I
        let m = clifford_to_spin(&CliffElement::word(&[0, 1, 2]));
        let v = &AlgNumber::sqrt2() * &AlgNumber::from_int(-2);
        assert_eq!(m, [[v.clone(), AlgNumber::zero()], [AlgNumber::zero(), v]]);
    }
}
