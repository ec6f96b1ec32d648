//! Exact scalars: big integers, canonical rationals and the quadratic field Q(√2).
//!
//! Every value in this crate is built from these three types, so nothing is ever
//! rounded. [`Rational`] keeps its fraction reduced with a positive denominator,
//! which makes structural equality the same as numeric equality.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i) before, C(n, i+1) after
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// `(-1)^e` as an integer.
pub fn sign_pow(e: u64) -> Integer {
    if e.is_multiple_of(2) {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// Exact rational number in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`, reducing to canonical form.
    pub fn new(num: impl Into<Integer>, den: impl Into<Integer>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<Integer>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// The integer value, if the denominator is 1.
    pub fn to_integer(&self) -> Option<Integer> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: Integer = num.parse().map_err(|_| err("bad numerator"))?;
        let den: Integer = den.parse().map_err(|_| err("bad denominator"))?;
        Rational::new(num, den).map_err(|_| err("zero denominator"))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $ty:ty, $impl_fn:ident) => {
        impl $tr<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $impl_fn(self, rhs)
            }
        }
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $impl_fn(&self, &rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $impl_fn(&self, rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $impl_fn(self, &rhs)
            }
        }
    };
}

fn rat_add(x: &Rational, y: &Rational) -> Rational {
    Rational(&x.0 + &y.0)
}

fn rat_sub(x: &Rational, y: &Rational) -> Rational {
    Rational(&x.0 - &y.0)
}

fn rat_mul(x: &Rational, y: &Rational) -> Rational {
    Rational(&x.0 * &y.0)
}

/// Panics on a zero divisor, like integer division; use [`Rational::checked_div`]
/// when the divisor is not known to be nonzero.
fn rat_div(x: &Rational, y: &Rational) -> Rational {
    x.checked_div(y).expect("rational division by zero")
}

forward_binop!(Add, add, Rational, rat_add);
forward_binop!(Sub, sub, Rational, rat_sub);
forward_binop!(Mul, mul, Rational, rat_mul);
forward_binop!(Div, div, Rational, rat_div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// An element `a + b√2` of Q(√2).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct QuadElem {
    pub a: Rational,
    pub b: Rational,
}

impl QuadElem {
    pub fn new(a: impl Into<Rational>, b: impl Into<Rational>) -> Self {
        QuadElem {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadElem {
            a,
            b: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        QuadElem::default()
    }

    pub fn one() -> Self {
        QuadElem::from_rational(Rational::one())
    }

    /// `√2`
    pub fn sqrt2() -> Self {
        QuadElem::new(0, 1)
    }

    /// `α = 3 + 2√2`, the dominant root of `x² − 6x + 1`.
    pub fn alpha() -> Self {
        QuadElem::new(3, 2)
    }

    /// `β = 3 − 2√2 = 1/α`.
    pub fn beta() -> Self {
        QuadElem::new(3, -2)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadElem {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// `a² − 2b²`
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from(2) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(QuadElem {
            a: c.a.checked_div(&norm)?,
            b: c.b.checked_div(&norm)?,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QuadElem {
            a: &self.a * c,
            b: &self.b * c,
        }
    }

    /// Binary exponentiation; `x⁰ = 1`.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QuadElem::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√2", self.b),
            (false, false) if self.b.is_negative() => {
                write!(f, "{} - {}√2", self.a, self.b.abs())
            }
            (false, false) => write!(f, "{} + {}√2", self.a, self.b),
        }
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl From<Rational> for QuadElem {
    fn from(a: Rational) -> Self {
        QuadElem::from_rational(a)
    }
}

fn quad_add(x: &QuadElem, y: &QuadElem) -> QuadElem {
    QuadElem {
        a: &x.a + &y.a,
        b: &x.b + &y.b,
    }
}

fn quad_sub(x: &QuadElem, y: &QuadElem) -> QuadElem {
    QuadElem {
        a: &x.a - &y.a,
        b: &x.b - &y.b,
    }
}

fn quad_mul(x: &QuadElem, y: &QuadElem) -> QuadElem {
    let two = Rational::from(2);
    QuadElem {
        a: &x.a * &y.a + two * &x.b * &y.b,
        b: &x.a * &y.b + &y.a * &x.b,
    }
}

fn quad_div(x: &QuadElem, y: &QuadElem) -> QuadElem {
    x * y.inverse().expect("division by a zero quadratic element")
}

forward_binop!(Add, add, QuadElem, quad_add);
forward_binop!(Sub, sub, QuadElem, quad_sub);
forward_binop!(Mul, mul, QuadElem, quad_mul);
forward_binop!(Div, div, QuadElem, quad_div);

impl AddAssign<&QuadElem> for QuadElem {
    fn add_assign(&mut self, rhs: &QuadElem) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem {
            a: -&self.a,
            b: -&self.b,
        }
    }
}
