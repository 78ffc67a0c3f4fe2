use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::Zero;

use super::label::FiberLabel;
use crate::algebra::number::AlgNumber;

/// Scalars in which fiber coefficients are computed.
pub trait FiberScalar: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn from_alg(x: &AlgNumber) -> Self;
    fn to_complex(&self) -> Complex64;
}

impl FiberScalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn from_alg(x: &AlgNumber) -> Self {
        x.to_complex()
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
}

impl FiberScalar for AlgNumber {
    fn zero() -> Self {
        <AlgNumber as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn from_alg(x: &AlgNumber) -> Self {
        x.clone()
    }
    fn to_complex(&self) -> Complex64 {
        AlgNumber::to_complex(self)
    }
}

/// Coefficient of a band as a function of the source index `m`.
pub type Coefficient<C> = Arc<dyn Fn(i64) -> C + Send + Sync>;

/// An operator on the weight lattice of one fiber with finitely many bands.
///
/// The band at offset `d` sends `v_m` to `coefficient(m) · v_{m+d}`.
#[derive(Clone)]
pub struct FiberOperator<C> {
    fiber: FiberLabel,
    bands: BTreeMap<i64, Coefficient<C>>,
}

impl<C: FiberScalar> FiberOperator<C> {
    pub fn zero(fiber: FiberLabel) -> Self {
        Self { fiber, bands: BTreeMap::new() }
    }

    pub fn scalar(fiber: FiberLabel, c: C) -> Self {
        Self::band(fiber, 0, move |_| c.clone())
    }

    pub fn identity(fiber: FiberLabel) -> Self {
        Self::scalar(fiber, C::from_alg(&AlgNumber::from_int(1)))
    }

    pub fn band(fiber: FiberLabel, offset: i64, f: impl Fn(i64) -> C + Send + Sync + 'static) -> Self {
        let mut bands: BTreeMap<i64, Coefficient<C>> = BTreeMap::new();
        bands.insert(offset, Arc::new(f));
        Self { fiber, bands }
    }

    pub fn fiber(&self) -> FiberLabel {
        self.fiber
    }

    pub fn offsets(&self) -> impl Iterator<Item = i64> + '_ {
        self.bands.keys().copied()
    }

    /// The coefficient of `v_{m+d}` in the image of `v_m`; zero off the support.
    pub fn entry(&self, d: i64, m: i64) -> C {
        match self.bands.get(&d) {
            Some(f) if self.fiber.contains(m) && self.fiber.contains(m + d) => f(m),
            _ => C::zero(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let fiber = self.fiber;
        let bands = self
            .bands
            .iter()
            .map(|(&d, f)| {
                let f = f.clone();
                let c = c.clone();
                (d, Arc::new(move |m| c.mul(&f(m))) as Coefficient<C>)
            })
            .collect();
        Self { fiber, bands }
    }

    /// Whether every band other than the diagonal vanishes on `[lo, hi]`.
    pub fn is_diagonal_on(&self, lo: i64, hi: i64) -> bool {
        self.offsets().filter(|&d| d != 0).all(|d| (lo..=hi).all(|m| self.entry(d, m).is_zero()))
    }
}

impl<C: FiberScalar> Add for &FiberOperator<C> {
    type Output = FiberOperator<C>;
    fn add(self, o: &FiberOperator<C>) -> FiberOperator<C> {
        let mut bands = self.bands.clone();
        for (&d, g) in &o.bands {
            let merged: Coefficient<C> = match bands.remove(&d) {
                Some(f) => {
                    let g = g.clone();
                    Arc::new(move |m| f(m).add(&g(m)))
                }
                None => g.clone(),
            };
            bands.insert(d, merged);
        }
        FiberOperator { fiber: self.fiber, bands }
    }
}

/// Composition `self ∘ o`.
impl<C: FiberScalar> Mul for &FiberOperator<C> {
    type Output = FiberOperator<C>;
    fn mul(self, o: &FiberOperator<C>) -> FiberOperator<C> {
        let mut parts: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
        for &d1 in self.bands.keys() {
            for &d2 in o.bands.keys() {
                parts.entry(d1 + d2).or_default().push((d1, d2));
            }
        }
        let bands = parts
            .into_iter()
            .map(|(d, pairs)| {
                let (a, b) = (self.clone(), o.clone());
                let f: Coefficient<C> = Arc::new(move |m| {
                    pairs.iter().fold(C::zero(), |acc, &(d1, d2)| {
                        acc.add(&a.entry(d1, m + d2).mul(&b.entry(d2, m)))
                    })
                });
                (d, f)
            })
            .collect();
        FiberOperator { fiber: self.fiber, bands }
    }
}

impl<C> fmt::Debug for FiberOperator<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiberOperator")
            .field("fiber", &self.fiber)
            .field("offsets", &self.bands.keys().collect::<Vec<_>>())
            .finish()
    }
}

/// A 2×2 block operator on spinor-valued weight vectors over one fiber.
#[derive(Clone, Debug)]
pub struct SpinFiberOperator<C> {
    pub blocks: [[FiberOperator<C>; 2]; 2],
}

impl<C: FiberScalar> SpinFiberOperator<C> {
    pub fn fiber(&self) -> FiberLabel {
        self.blocks[0][0].fiber()
    }

    pub fn block(&self, i: usize, j: usize) -> &FiberOperator<C> {
        &self.blocks[i][j]
    }

    /// The coefficient of `(i, m+d)` in the image of `(j, m)`.
    pub fn entry(&self, i: usize, j: usize, d: i64, m: i64) -> C {
        self.blocks[i][j].entry(d, m)
    }

    /// Largest band offset in absolute value.
    pub fn bandwidth(&self) -> i64 {
        self.blocks.iter().flatten().flat_map(|b| b.offsets()).map(i64::abs).max().unwrap_or(0)
    }

    /// Applies the operator to a finitely supported vector `(component, m) ↦ value`.
    pub fn apply(&self, v: &BTreeMap<(usize, i64), C>) -> BTreeMap<(usize, i64), C> {
        let mut out: BTreeMap<(usize, i64), C> = BTreeMap::new();
        for (&(j, m), x) in v {
            for i in 0..2 {
                let b = &self.blocks[i][j];
                for d in b.offsets() {
                    let c = b.entry(d, m);
                    if c.is_zero() {
                        continue;
                    }
                    let slot = out.entry((i, m + d)).or_insert_with(C::zero);
                    *slot = slot.add(&c.mul(x));
                }
            }
        }
        out
    }
}

impl<C: FiberScalar> Add for &SpinFiberOperator<C> {
    type Output = SpinFiberOperator<C>;
    fn add(self, o: &SpinFiberOperator<C>) -> SpinFiberOperator<C> {
        SpinFiberOperator {
            blocks: std::array::from_fn(|i| std::array::from_fn(|j| &self.blocks[i][j] + &o.blocks[i][j])),
        }
    }
}

impl<C: FiberScalar> Mul for &SpinFiberOperator<C> {
    type Output = SpinFiberOperator<C>;
    fn mul(self, o: &SpinFiberOperator<C>) -> SpinFiberOperator<C> {
        SpinFiberOperator {
            blocks: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    &(&self.blocks[i][0] * &o.blocks[0][j]) + &(&self.blocks[i][1] * &o.blocks[1][j])
                })
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibers::label::Parity;

    fn shift(fiber: FiberLabel) -> FiberOperator<Complex64> {
        FiberOperator::band(fiber, 1, |m| Complex64::new(m as f64, 0.0))
    }

    #[test]
    fn composition_adds_offsets() {
        let f = FiberLabel::principal(0.5, Parity::Zero).unwrap();
        let a = shift(f);
        let p = &a * &a;
        assert_eq!(p.offsets().collect::<Vec<_>>(), vec![2]);
        // v_m ↦ m v_{m+1} ↦ m(m+1) v_{m+2}
        assert_eq!(p.entry(2, 3), Complex64::new(12.0, 0.0));
    }

    #[test]
    fn entries_vanish_off_support() {
        let f = FiberLabel::negative(-4);
        let a = shift(f);
        assert_eq!(a.entry(1, -3), Complex64::new(-3.0, 0.0));
        assert_eq!(a.entry(1, -2), Complex64::new(0.0, 0.0));
        assert_eq!(a.entry(1, 5), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn sum_merges_bands() {
        let f = FiberLabel::principal(0.0, Parity::Half).unwrap();
        let s = &FiberOperator::<Complex64>::identity(f) + &FiberOperator::scalar(f, Complex64::new(2.0, 0.0));
        assert_eq!(s.entry(0, 7), Complex64::new(3.0, 0.0));
        assert!(s.is_diagonal_on(-5, 5));
    }
}
