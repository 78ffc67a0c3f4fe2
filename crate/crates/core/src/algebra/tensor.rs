//! The algebra `U(g) ⊗ Cl(g)`, stored as a map from Clifford blades to
//! enveloping-algebra coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::clifford::{blade_indices, Blade, CliffElement};
use super::envelope::EnvElement;
use super::number::AlgNumber;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EnvCliff {
    terms: BTreeMap<Blade, EnvElement>,
}

impl EnvCliff {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `x ⊗ c` for an enveloping element and a Clifford element.
    pub fn pure(x: &EnvElement, c: &CliffElement) -> Self {
        let mut out = Self::zero();
        for (b, k) in c.terms() {
            out.add_blade(*b, &x.scale(k));
        }
        out
    }

    /// `x ⊗ 1`.
    pub fn env(x: &EnvElement) -> Self {
        Self::pure(x, &CliffElement::one())
    }

    /// `1 ⊗ c`.
    pub fn cliff(c: &CliffElement) -> Self {
        Self::pure(&EnvElement::one(), c)
    }

    pub fn add_blade(&mut self, b: Blade, x: &EnvElement) {
        if x.is_zero() {
            return;
        }
        let slot = self.terms.entry(b).or_default();
        *slot = &*slot + x;
        if slot.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &EnvElement)> {
        self.terms.iter()
    }

    pub fn component(&self, b: Blade) -> EnvElement {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &AlgNumber) -> Self {
        let mut out = Self::zero();
        for (b, x) in &self.terms {
            out.add_blade(*b, &x.scale(s));
        }
        out
    }

    /// `(x ⊗ c)* = x* ⊗ c*`.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for (b, x) in &self.terms {
            let cb = CliffElement::blade(*b, AlgNumber::from_int(1)).adjoint();
            out = &out + &Self::pure(&x.adjoint(), &cb);
        }
        out
    }

    pub fn anticommutator(&self, o: &Self) -> Self {
        &(self * o) + &(o * self)
    }

    pub fn commutator(&self, o: &Self) -> Self {
        &(self * o) - &(o * self)
    }
}

impl Add for &EnvCliff {
    type Output = EnvCliff;
    fn add(self, o: &EnvCliff) -> EnvCliff {
        let mut out = self.clone();
        for (b, x) in &o.terms {
            out.add_blade(*b, x);
        }
        out
    }
}

impl Neg for &EnvCliff {
    type Output = EnvCliff;
    fn neg(self) -> EnvCliff {
        self.scale(&AlgNumber::from_int(-1))
    }
}

impl Sub for &EnvCliff {
    type Output = EnvCliff;
    fn sub(self, o: &EnvCliff) -> EnvCliff {
        self + &(-o)
    }
}

impl Mul for &EnvCliff {
    type Output = EnvCliff;
    fn mul(self, o: &EnvCliff) -> EnvCliff {
        let mut out = EnvCliff::zero();
        for (s, x) in &self.terms {
            for (t, y) in &o.terms {
                let c = &CliffElement::blade(*s, AlgNumber::from_int(1))
                    * &CliffElement::blade(*t, AlgNumber::from_int(1));
                out = &out + &EnvCliff::pure(&(x * y), &c);
            }
        }
        out
    }
}

impl fmt::Display for EnvCliff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, x)| {
                let name: String = blade_indices(*b).iter().map(|i| format!("c{}", i + 1)).collect();
                if name.is_empty() {
                    format!("[{x}]")
                } else {
                    format!("[{x}] (x) {name}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
