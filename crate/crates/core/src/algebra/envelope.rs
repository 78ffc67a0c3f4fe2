//! The universal enveloping algebra of su(1,1) in PBW normal form.
//!
//! Elements are finite sums of ordered monomials `e1^a e2^b e3^c`. Products are
//! reduced by moving a generator leftward past smaller-indexed ones with
//! `e_g e_h = e_h e_g + [e_g, e_h]`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::lie::{LieBasisVector, LieElement, DIM, STRUCTURE};
use super::number::AlgNumber;

/// Exponents `(a, b, c)` of the ordered monomial `e1^a e2^b e3^c`.
pub type Monomial = [u32; 3];

/// A finite linear combination of PBW monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EnvElement {
    terms: BTreeMap<Monomial, AlgNumber>,
}

thread_local! {
    static GEN_TIMES_MONO: RefCell<HashMap<(usize, Monomial), EnvElement>> = RefCell::new(HashMap::new());
}

fn first_generator(m: &Monomial) -> Option<usize> {
    m.iter().position(|&k| k > 0)
}

/// `e_g · (e1^a e2^b e3^c)` in normal form.
fn gen_times_mono(g: usize, m: Monomial) -> EnvElement {
    if let Some(hit) = GEN_TIMES_MONO.with(|c| c.borrow().get(&(g, m)).cloned()) {
        return hit;
    }
    let out = match first_generator(&m) {
        Some(h) if h < g => {
            let mut rest = m;
            rest[h] -= 1;
            let mut acc = gen_times_mono(g, rest).left_mul_gen(h);
            for (k, &c) in STRUCTURE[g][h].iter().enumerate() {
                if c != 0 {
                    acc = acc + gen_times_mono(k, rest).scale(&AlgNumber::from_int(c));
                }
            }
            acc
        }
        _ => {
            let mut n = m;
            n[g] += 1;
            EnvElement::monomial(n)
        }
    };
    GEN_TIMES_MONO.with(|c| c.borrow_mut().insert((g, m), out.clone()));
    out
}

impl EnvElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(AlgNumber::one())
    }

    pub fn constant(c: AlgNumber) -> Self {
        Self::term([0, 0, 0], c)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, AlgNumber::one())
    }

    pub fn term(m: Monomial, c: AlgNumber) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn generator(v: LieBasisVector) -> Self {
        let mut m = [0; 3];
        m[v.index()] = 1;
        Self::monomial(m)
    }

    pub fn from_lie(x: &LieElement) -> Self {
        let mut out = Self::zero();
        for v in LieBasisVector::ALL {
            let mut m = [0; 3];
            m[v.index()] = 1;
            out.add_term(m, &x.0[v.index()]);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &AlgNumber)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> AlgNumber {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    /// The constant coefficient, if the element is a scalar.
    pub fn as_constant(&self) -> Option<AlgNumber> {
        match self.terms.len() {
            0 => Some(AlgNumber::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &AlgNumber) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, s: &AlgNumber) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, c)| (*m, s * c)).collect() }
    }

    /// `e_g · self`.
    pub fn left_mul_gen(&self, g: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (n, d) in gen_times_mono(g, *m).terms {
                out.add_term(n, &(c * &d));
            }
        }
        out
    }

    fn mono_times(m: &Monomial, y: &Self) -> Self {
        let mut acc = y.clone();
        for g in (0..DIM).rev() {
            for _ in 0..m[g] {
                acc = acc.left_mul_gen(g);
            }
        }
        acc
    }

    pub fn commutator(&self, o: &Self) -> Self {
        &(self * o) - &(o * self)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// The conjugate-linear anti-involution with `e_i ↦ −e_i`.
    ///
    /// This is the formal adjoint for the regular action on `L²(G)`: real Lie
    /// algebra elements act skew-adjointly.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            // (e1^a e2^b e3^c)* = (−1)^{a+b+c} e3^c e2^b e1^a
            let deg: u32 = m.iter().sum();
            let sign = if deg % 2 == 0 { 1 } else { -1 };
            let mut rev = Self::constant(&c.conj() * &AlgNumber::from_int(sign));
            for g in 0..DIM {
                for _ in 0..m[g] {
                    rev = rev.left_mul_gen(g);
                }
            }
            out = out + rev;
        }
        out
    }

    pub fn map_coefficients(&self, f: impl Fn(&AlgNumber) -> AlgNumber) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &f(c));
        }
        out
    }
}

impl Add for EnvElement {
    type Output = EnvElement;
    fn add(mut self, o: EnvElement) -> EnvElement {
        for (m, c) in &o.terms {
            self.add_term(*m, c);
        }
        self
    }
}

impl Add for &EnvElement {
    type Output = EnvElement;
    fn add(self, o: &EnvElement) -> EnvElement {
        self.clone() + o.clone()
    }
}

impl Neg for &EnvElement {
    type Output = EnvElement;
    fn neg(self) -> EnvElement {
        EnvElement { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for EnvElement {
    type Output = EnvElement;
    fn neg(self) -> EnvElement {
        -&self
    }
}

impl Sub for &EnvElement {
    type Output = EnvElement;
    fn sub(self, o: &EnvElement) -> EnvElement {
        self + &(-o)
    }
}

impl Sub for EnvElement {
    type Output = EnvElement;
    fn sub(self, o: EnvElement) -> EnvElement {
        &self - &o
    }
}

impl Mul for &EnvElement {
    type Output = EnvElement;
    fn mul(self, o: &EnvElement) -> EnvElement {
        let mut out = EnvElement::zero();
        for (m, c) in &self.terms {
            out = out + EnvElement::mono_times(m, o).scale(c);
        }
        out
    }
}

impl Mul for EnvElement {
    type Output = EnvElement;
    fn mul(self, o: EnvElement) -> EnvElement {
        &self * &o
    }
}

impl fmt::Display for EnvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (g, &k) in m.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*e{}", g + 1)?,
                    _ => write!(f, "*e{}^{}", g + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

/// The Casimir `Ω = Σ e^a e_a = ½e1² + ½e2² − ½e3²`.
pub fn casimir() -> EnvElement {
    let dual = super::lie::dual_basis();
    let mut out = EnvElement::zero();
    for v in LieBasisVector::ALL {
        out = out + &EnvElement::from_lie(&dual[v.index()]) * &EnvElement::generator(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::number::rat;
    use proptest::prelude::*;
    use LieBasisVector::*;

    fn g(v: LieBasisVector) -> EnvElement {
        EnvElement::generator(v)
    }

    pub(crate) fn arb_env(max_deg: u32) -> impl Strategy<Value = EnvElement> {
        proptest::collection::vec(
            ((0..=max_deg, 0..=max_deg, 0..=max_deg), -5i64..5, -3i64..3),
            0..5,
        )
        .prop_map(move |ts| {
            let mut out = EnvElement::zero();
            for ((a, b, c), re, im) in ts {
                if a + b + c <= max_deg {
                    out.add_term([a, b, c], &AlgNumber::gauss((re, 1), (im, 2)));
                }
            }
            out
        })
    }

    #[test]
    fn generators_commute_to_brackets() {
        assert_eq!(g(E1).commutator(&g(E2)), g(E3));
        assert_eq!(g(E2).commutator(&g(E3)), -g(E1));
        assert_eq!(g(E3).commutator(&g(E1)), -g(E2));
    }

    #[test]
    fn reordering_example() {
        // e3 e1 = e1 e3 + [e3, e1] = e1 e3 − e2
        let lhs = &g(E3) * &g(E1);
        let rhs = EnvElement::monomial([1, 0, 1]) - g(E2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn casimir_form() {
        let half = AlgNumber::from_rational(rat(1, 2));
        let mut expect = EnvElement::zero();
        expect.add_term([2, 0, 0], &half);
        expect.add_term([0, 2, 0], &half);
        expect.add_term([0, 0, 2], &-&half);
        assert_eq!(casimir(), expect);
    }

    #[test]
    fn casimir_is_central() {
        let om = casimir();
        for v in LieBasisVector::ALL {
            assert!(om.commutator(&g(v)).is_zero());
        }
    }

    #[test]
    fn adjoint_of_generators() {
        for v in LieBasisVector::ALL {
            assert_eq!(g(v).adjoint(), -g(v));
        }
        let x = &g(E1) * &g(E3);
        assert_eq!(x.adjoint(), &g(E3) * &g(E1));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn prop_associative(x in arb_env(3), y in arb_env(3), z in arb_env(3)) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn prop_normal_form_is_canonical(x in arb_env(3), y in arb_env(3)) {
            // Two routes to the same element yield the same map.
            let a = &(&x + &y) * &(&x - &y);
            let b = &(&(&x * &x) - &(&x * &y)) + &(&(&y * &x) - &(&y * &y));
            prop_assert_eq!(a, b);
        }

        #[test]
        fn prop_adjoint_is_anti_multiplicative(x in arb_env(2), y in arb_env(2)) {
            prop_assert_eq!((&x * &y).adjoint(), &y.adjoint() * &x.adjoint());
        }

        #[test]
        fn prop_adjoint_is_involutive(x in arb_env(3)) {
            prop_assert_eq!(x.adjoint().adjoint(), x);
        }

        #[test]
        fn prop_casimir_central(x in arb_env(3)) {
            prop_assert!(casimir().commutator(&x).is_zero());
        }
    }
}
