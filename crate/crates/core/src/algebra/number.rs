//! Exact scalars in the field `Q(i, √2)`.
//!
//! Every coefficient that appears in the Dirac computations has the shape
//! `a + b√2` with `a`, `b` Gaussian rationals. Keeping that shape closed under
//! the ring operations lets identities be checked by structural equality to zero.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Builds a rational from a numerator and a nonzero denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A Gaussian rational `re + i·im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self { re: &self.re / &n, im: -&self.im / &n })
    }

    fn mul_ref(&self, o: &Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn scale(&self, r: &BigRational) -> Self {
        Self { re: &self.re * r, im: &self.im * r }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -&self.re, im: -&self.im }
    }
}

/// An element `a + b√2` of `Q(i, √2)` with `a, b ∈ Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AlgNumber {
    pub a: GaussRat,
    pub b: GaussRat,
}

impl AlgNumber {
    pub fn new(a: GaussRat, b: GaussRat) -> Self {
        Self { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self { a: GaussRat::real(r), b: GaussRat::default() }
    }

    /// `re + i·im` with rational parts given as `(num, den)` pairs.
    pub fn gauss(re: (i64, i64), im: (i64, i64)) -> Self {
        Self {
            a: GaussRat::new(rat(re.0, re.1), rat(im.0, im.1)),
            b: GaussRat::default(),
        }
    }

    pub fn i() -> Self {
        Self { a: GaussRat::i(), b: GaussRat::default() }
    }

    pub fn sqrt2() -> Self {
        Self { a: GaussRat::default(), b: GaussRat::real(BigRational::one()) }
    }

    /// Exact conversion of a finite double (every double is a dyadic rational).
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Self::from_rational)
    }

    pub fn is_real_rational(&self) -> bool {
        self.a.im.is_zero() && self.b.is_zero()
    }

    /// Complex conjugation `i ↦ −i`; `√2` is fixed.
    pub fn conj(&self) -> Self {
        Self { a: self.a.conj(), b: self.b.conj() }
    }

    /// The Galois conjugate `√2 ↦ −√2`.
    pub fn sqrt2_conj(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self { a: self.a.scale(r), b: self.b.scale(r) }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        // (a + b√2)(a − b√2) = a² − 2b² lies in Q(i) and vanishes only at 0.
        let conj = self.sqrt2_conj();
        let two = rat(2, 1);
        let n = &self.a.mul_ref(&self.a) - &self.b.mul_ref(&self.b).scale(&two);
        let ninv = n.inv().ok_or(AlgebraError::DivisionByZero)?;
        Ok(Self { a: conj.a.mul_ref(&ninv), b: conj.b.mul_ref(&ninv) })
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        self.a.to_complex() + self.b.to_complex() * std::f64::consts::SQRT_2
    }
}

impl Zero for AlgNumber {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for AlgNumber {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for AlgNumber {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for AlgNumber {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl Add for &AlgNumber {
    type Output = AlgNumber;
    fn add(self, o: &AlgNumber) -> AlgNumber {
        AlgNumber { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &AlgNumber {
    type Output = AlgNumber;
    fn sub(self, o: &AlgNumber) -> AlgNumber {
        AlgNumber { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Mul for &AlgNumber {
    type Output = AlgNumber;
    fn mul(self, o: &AlgNumber) -> AlgNumber {
        let two = rat(2, 1);
        AlgNumber {
            a: &self.a.mul_ref(&o.a) + &self.b.mul_ref(&o.b).scale(&two),
            b: &self.a.mul_ref(&o.b) + &self.b.mul_ref(&o.a),
        }
    }
}

impl Neg for &AlgNumber {
    type Output = AlgNumber;
    fn neg(self) -> AlgNumber {
        AlgNumber { a: -&self.a, b: -&self.b }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for AlgNumber {
            type Output = AlgNumber;
            fn $m(self, o: AlgNumber) -> AlgNumber {
                (&self).$m(&o)
            }
        }
        impl $tr<&AlgNumber> for AlgNumber {
            type Output = AlgNumber;
            fn $m(self, o: &AlgNumber) -> AlgNumber {
                (&self).$m(o)
            }
        }
        impl $tr<AlgNumber> for &AlgNumber {
            type Output = AlgNumber;
            fn $m(self, o: AlgNumber) -> AlgNumber {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for AlgNumber {
    type Output = AlgNumber;
    fn neg(self) -> AlgNumber {
        -&self
    }
}

impl Div for AlgNumber {
    type Output = AlgNumber;
    /// Panics on division by zero; use [`AlgNumber::checked_div`] to recover.
    fn div(self, o: AlgNumber) -> AlgNumber {
        self.checked_div(&o).expect("division by zero in Q(i, sqrt 2)")
    }
}

impl AddAssign<&AlgNumber> for AlgNumber {
    fn add_assign(&mut self, o: &AlgNumber) {
        *self = &*self + o;
    }
}

impl SubAssign<&AlgNumber> for AlgNumber {
    fn sub_assign(&mut self, o: &AlgNumber) {
        *self = &*self - o;
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_gauss(g: &GaussRat) -> Option<String> {
    match (g.re.is_zero(), g.im.is_zero()) {
        (true, true) => None,
        (false, true) => Some(fmt_rat(&g.re)),
        (true, false) => Some(format!("{}i", fmt_rat(&g.im))),
        (false, false) => {
            let sign = if g.im.is_negative() { "-" } else { "+" };
            Some(format!("({} {} {}i)", fmt_rat(&g.re), sign, fmt_rat(&g.im.abs())))
        }
    }
}

impl fmt::Display for AlgNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (fmt_gauss(&self.a), fmt_gauss(&self.b)) {
            (None, None) => write!(f, "0"),
            (Some(a), None) => write!(f, "{a}"),
            (None, Some(b)) => write!(f, "{b}*sqrt2"),
            (Some(a), Some(b)) => write!(f, "{a} + {b}*sqrt2"),
        }
    }
}
