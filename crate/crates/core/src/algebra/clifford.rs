//! Exterior and Clifford algebras over su(1,1) with the Killing form as metric.
//!
//! Both algebras use blades indexed by a bitmask over `e1, e2, e3`. Clifford
//! products are reduced with `e_i e_j + e_j e_i = 2B(e_i, e_j)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use super::lie::{dual_basis, killing_form, killing_matrix, LieElement, Matrix3, DIM};
use super::number::{rat, AlgNumber};

/// A subset of `{e1, e2, e3}` encoded as a bitmask.
pub type Blade = u8;

pub fn blade_indices(b: Blade) -> Vec<usize> {
    (0..DIM).filter(|i| b & (1 << i) != 0).collect()
}

pub fn blade_grade(b: Blade) -> u32 {
    b.count_ones()
}

fn add_into(map: &mut BTreeMap<Blade, AlgNumber>, b: Blade, c: &AlgNumber) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(b).or_default();
    *slot += c;
    if slot.is_zero() {
        map.remove(&b);
    }
}

/// An element of `Λ(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExtElement {
    terms: BTreeMap<Blade, AlgNumber>,
}

impl ExtElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn blade(b: Blade, c: AlgNumber) -> Self {
        let mut terms = BTreeMap::new();
        add_into(&mut terms, b, &c);
        Self { terms }
    }

    pub fn from_vector(x: &LieElement) -> Self {
        let mut out = Self::zero();
        for i in 0..DIM {
            add_into(&mut out.terms, 1 << i, &x.0[i]);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &AlgNumber)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &AlgNumber) -> Self {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            add_into(&mut out.terms, *b, &(s * c));
        }
        out
    }

    pub fn wedge(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (s, c) in &self.terms {
            for (t, d) in &o.terms {
                if s & t != 0 {
                    continue;
                }
                // Sign of the shuffle that sorts the concatenated indices.
                let inversions: u32 = blade_indices(*s)
                    .iter()
                    .map(|&i| blade_indices(*t).iter().filter(|&&j| j < i).count() as u32)
                    .sum();
                let p = c * d;
                let p = if inversions % 2 == 0 { p } else { -p };
                add_into(&mut out.terms, s | t, &p);
            }
        }
        out
    }
}

impl Add for &ExtElement {
    type Output = ExtElement;
    fn add(self, o: &ExtElement) -> ExtElement {
        let mut out = self.clone();
        for (b, c) in &o.terms {
            add_into(&mut out.terms, *b, c);
        }
        out
    }
}

/// The structure 3-form `φ = −(1/12) Σ B([e_a, e_b], e_c) e^a ∧ e^b ∧ e^c`.
pub fn structure_tensor() -> ExtElement {
    let dual = dual_basis();
    let basis: [LieElement; 3] = std::array::from_fn(|i| {
        LieElement::basis(super::lie::LieBasisVector::from_index(i))
    });
    let mut out = ExtElement::zero();
    for a in 0..DIM {
        for b in 0..DIM {
            for c in 0..DIM {
                let coeff = killing_form(&basis[a].bracket(&basis[b]), &basis[c]);
                if coeff.is_zero() {
                    continue;
                }
                let w = ExtElement::from_vector(&dual[a])
                    .wedge(&ExtElement::from_vector(&dual[b]))
                    .wedge(&ExtElement::from_vector(&dual[c]));
                out = &out + &w.scale(&coeff);
            }
        }
    }
    out.scale(&AlgNumber::from_rational(rat(-1, 12)))
}

fn metric() -> &'static Matrix3 {
    static METRIC: OnceLock<Matrix3> = OnceLock::new();
    METRIC.get_or_init(killing_matrix)
}

/// An element of `Cl(g, B)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CliffElement {
    terms: BTreeMap<Blade, AlgNumber>,
}

fn normalize_word(word: &[usize], metric: &Matrix3) -> CliffElement {
    let pos = word.windows(2).position(|w| w[0] >= w[1]);
    match pos {
        None => {
            let b = word.iter().fold(0u8, |acc, &i| acc | (1 << i));
            CliffElement::blade(b, AlgNumber::one())
        }
        Some(p) => {
            let (x, y) = (word[p], word[p + 1]);
            let mut shorter = word.to_vec();
            shorter.drain(p..p + 2);
            if x == y {
                normalize_word(&shorter, metric).scale(&metric[x][x])
            } else {
                let mut swapped = word.to_vec();
                swapped.swap(p, p + 1);
                let two_b = &metric[x][y] * &AlgNumber::from_int(2);
                &normalize_word(&shorter, metric).scale(&two_b) - &normalize_word(&swapped, metric)
            }
        }
    }
}

impl CliffElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(AlgNumber::one())
    }

    pub fn scalar(c: AlgNumber) -> Self {
        Self::blade(0, c)
    }

    pub fn blade(b: Blade, c: AlgNumber) -> Self {
        let mut terms = BTreeMap::new();
        add_into(&mut terms, b, &c);
        Self { terms }
    }

    pub fn generator(i: usize) -> Self {
        Self::blade(1 << i, AlgNumber::one())
    }

    pub fn from_vector(x: &LieElement) -> Self {
        let mut out = Self::zero();
        for i in 0..DIM {
            add_into(&mut out.terms, 1 << i, &x.0[i]);
        }
        out
    }

    /// The ordered product `e_{w0} e_{w1} ...` in blade form.
    pub fn word(word: &[usize]) -> Self {
        normalize_word(word, metric())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &AlgNumber)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: Blade) -> AlgNumber {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &AlgNumber) -> Self {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            add_into(&mut out.terms, *b, &(s * c));
        }
        out
    }

    /// The conjugate-linear anti-involution matching the Hermitian adjoint in
    /// the spin representation: `e_i* = sign(B(e_i, e_i)) e_i`.
    pub fn adjoint(&self) -> Self {
        let metric = metric();
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            let idx = blade_indices(*b);
            let k = idx.len();
            let mut sign = if (k * (k.saturating_sub(1)) / 2) % 2 == 0 { 1 } else { -1 };
            for &i in &idx {
                if metric[i][i].a.re.is_negative() {
                    sign = -sign;
                }
            }
            add_into(&mut out.terms, *b, &(&c.conj() * &AlgNumber::from_int(sign)));
        }
        out
    }
}

impl Add for &CliffElement {
    type Output = CliffElement;
    fn add(self, o: &CliffElement) -> CliffElement {
        let mut out = self.clone();
        for (b, c) in &o.terms {
            add_into(&mut out.terms, *b, c);
        }
        out
    }
}

impl Neg for &CliffElement {
    type Output = CliffElement;
    fn neg(self) -> CliffElement {
        self.scale(&AlgNumber::from_int(-1))
    }
}

impl Sub for &CliffElement {
    type Output = CliffElement;
    fn sub(self, o: &CliffElement) -> CliffElement {
        self + &(-o)
    }
}

impl Mul for &CliffElement {
    type Output = CliffElement;
    fn mul(self, o: &CliffElement) -> CliffElement {
        let metric = metric();
        let mut out = CliffElement::zero();
        for (s, c) in &self.terms {
            for (t, d) in &o.terms {
                let mut w = blade_indices(*s);
                w.extend(blade_indices(*t));
                out = &out + &normalize_word(&w, metric).scale(&(c * d));
            }
        }
        out
    }
}

impl fmt::Display for CliffElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| {
                let idx = blade_indices(*b);
                if idx.is_empty() {
                    format!("({c})")
                } else {
                    let name: Vec<String> = idx.iter().map(|i| format!("e{}", i + 1)).collect();
                    format!("({c})*{}", name.join(""))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // Inserting the largest element at `pos` creates len−pos inversions.
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// The quantization map `q: Λ(g) → Cl(g)`, `x1∧…∧xk ↦ (1/k!) Σ_σ sgn(σ) x_σ1 ⋯ x_σk`.
pub fn quantize(w: &ExtElement) -> CliffElement {
    let metric = metric();
    let mut out = CliffElement::zero();
    for (b, c) in w.terms() {
        let idx = blade_indices(*b);
        let perms = permutations(idx.len());
        let fact = perms.len() as i64;
        let mut acc = CliffElement::zero();
        for (p, sign) in perms {
            let word: Vec<usize> = p.iter().map(|&j| idx[j]).collect();
            acc = &acc + &normalize_word(&word, metric).scale(&AlgNumber::from_int(sign));
        }
        out = &out + &acc.scale(&c.scale(&rat(1, fact)));
    }
    out
}

/// The image `q(φ)` of the structure tensor.
pub fn quantized_structure_tensor() -> CliffElement {
    quantize(&structure_tensor())
}
