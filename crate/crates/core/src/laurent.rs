//! Laurent polynomials in one variable over Q(√2), used to prove the
//! linearization and subsequence identities symbolically.
//!
//! The variable `X` stands for `α^n` (or `α^{km}` for the subsequence
//! recurrence), so `X^{-1}` is the matching power of `β = 1/α`. Each identity
//! is checked for a fixed exponent `l` (or spacing `m`) and then holds for
//! every `n` (or `k`) at once.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{binomial, sign_pow, QuadElem, Rational};
use crate::error::{invalid, Result};
use crate::linearize::LinearForm;
use crate::sequences::balancing;

/// Finitely supported map `exponent → coefficient`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, QuadElem>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(QuadElem::one())
    }

    pub fn constant(c: QuadElem) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    /// `c·X^exp`
    pub fn monomial(c: QuadElem, exp: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_coeff(exp, c);
        p
    }

    /// `X`
    pub fn var() -> Self {
        LaurentPoly::monomial(QuadElem::one(), 1)
    }

    /// `a·X^e − b·X^{−e}`, the shape every Binet difference takes.
    pub fn binet_pair(a: QuadElem, b: QuadElem, e: i64) -> Self {
        LaurentPoly::monomial(a, e) - LaurentPoly::monomial(b, -e)
    }

    fn add_coeff(&mut self, exp: i64, c: QuadElem) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> QuadElem {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Number of stored (nonzero) coefficients.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &QuadElem)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, c: &QuadElem) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, x) in &self.coeffs {
            out.add_coeff(*e, x * c);
        }
        out
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
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

    /// Value at `X = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> QuadElem {
        let mut acc = QuadElem::zero();
        for c in self.coeffs.values() {
            acc += c;
        }
        acc
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})X^{e}")?;
        }
        Ok(())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_coeff(*e, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_coeff(*e, -c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_coeff(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-QuadElem::one())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

fn rat(q: crate::arith::Integer) -> QuadElem {
    QuadElem::from_rational(Rational::from(q))
}

fn int_exp(e: u64) -> i64 {
    i64::try_from(e).expect("exponent fits in i64")
}

/// `1/(4√2) = √2/8`
fn inv_binet_denominator() -> QuadElem {
    QuadElem::new(0, Rational::new(1, 8).expect("nonzero"))
}

/// `B_{j(n+shift)}` with `X = α^n`: `(α^{j·shift} X^j − β^{j·shift} X^{−j})/(4√2)`.
fn encode_balancing(multiplier: u64, shift: u64) -> LaurentPoly {
    let a = QuadElem::alpha().pow(multiplier * shift);
    let b = QuadElem::beta().pow(multiplier * shift);
    LaurentPoly::binet_pair(a, b, int_exp(multiplier)).scale(&inv_binet_denominator())
}

/// `B_n^power` with `X = α^n`.
fn encode_balancing_power(power: u64) -> LaurentPoly {
    encode_balancing(1, 0).pow(power)
}

/// Checks `(X − X^{−1})^{2l+1} = Σ_{0≤s≤l} (−1)^s C(2l+1, s)(X^{2l+1−2s} − X^{−(2l+1−2s)})`.
///
/// Dividing both sides by `(4√2)^{2l+1} = 32^l · 4√2` gives the odd-power
/// linearization for every `n`.
pub fn verify_odd_theorem(l: u64) -> bool {
    let x_minus_inv = LaurentPoly::binet_pair(QuadElem::one(), QuadElem::one(), 1);
    let lhs = x_minus_inv.pow(2 * l + 1);
    let mut rhs = LaurentPoly::zero();
    for s in 0..=l {
        let c = rat(sign_pow(s) * binomial(2 * l + 1, s));
        let e = int_exp(2 * l + 1 - 2 * s);
        rhs = rhs + LaurentPoly::binet_pair(QuadElem::one(), QuadElem::one(), e).scale(&c);
    }
    (lhs - rhs).is_zero()
}

/// Checks the even-power linearization of `B_n^{2l}`, both sides multiplied
/// by `2^{5l}`, with the constant term `(−1)^l C(2l, l)` (i.e. `2^{−5l}(−1)^l C(2l, l)`
/// before scaling).
pub fn verify_even_theorem(l: u64) -> Result<bool> {
    if l == 0 {
        return Err(invalid("l", l, "even identity needs l >= 1"));
    }
    let scale = rat(crate::arith::Integer::from(1) << (5 * l));
    let lhs = encode_balancing_power(2 * l).scale(&scale);

    let mut rhs = LaurentPoly::constant(rat(sign_pow(l) * binomial(2 * l, l)));
    for s in 0..l {
        let j = 2 * (l - s);
        let signed_binom = Rational::from(sign_pow(s) * binomial(2 * l, s));
        let b_j = Rational::from(balancing(j));
        let b_half = Rational::from(balancing(l - s));

        let paired = Rational::from(2) * &signed_binom / &b_j;
        let pair = &encode_balancing(j, 0) + &encode_balancing(j, 1);
        rhs = rhs + pair.scale(&QuadElem::from_rational(paired));

        let single = -(&signed_binom * &b_j) / (&b_half * &b_half);
        rhs = rhs + encode_balancing(j, 0).scale(&QuadElem::from_rational(single));
    }
    Ok((lhs - rhs).is_zero())
}

/// Checks that `form` equals `B_n^{form.power()}` as a Laurent polynomial in `α^n`.
pub fn verify_linear_form(form: &LinearForm) -> bool {
    let lhs = encode_balancing_power(form.power());
    let mut rhs = LaurentPoly::constant(QuadElem::from_rational(form.constant().clone()));
    for (key, coeff) in form.terms() {
        let term = encode_balancing(key.multiplier, key.shift as u64);
        rhs = rhs + term.scale(&QuadElem::from_rational(coeff.clone()));
    }
    (lhs - rhs).is_zero()
}

/// Checks the subsequence recurrence
/// `B_{km} − 6B_m B_{(k−1)m} + 2B_{m−1} B_{(k−1)m} + B_{(k−2)m} = 0`
/// in its Binet form (multiplied through by `(α − β)²`), with `K = α^{km}`.
pub fn verify_lemma_identity(m: u64) -> Result<bool> {
    if m < 2 {
        return Err(invalid("m", m, "the symbolic lemma check covers m >= 2"));
    }
    let alpha = QuadElem::alpha();
    let beta = QuadElem::beta();
    let a_m = alpha.pow(m);
    let b_m = beta.pow(m);
    let a_2m = alpha.pow(2 * m);
    let b_2m = beta.pow(2 * m);
    let diff = &alpha - &beta;

    // α^{km} − β^{km}
    let top = LaurentPoly::binet_pair(QuadElem::one(), QuadElem::one(), 1);
    // α^{(k−1)m} − β^{(k−1)m} = β^m K − α^m K^{−1}
    let prev = LaurentPoly::binet_pair(b_m.clone(), a_m.clone(), 1);
    // α^{(k−2)m} − β^{(k−2)m} = β^{2m} K − α^{2m} K^{−1}
    let prev2 = LaurentPoly::binet_pair(b_2m, a_2m, 1);

    let six = QuadElem::new(6, 0);
    let two = QuadElem::new(2, 0);
    let expr = top.scale(&diff) - prev.scale(&(&six * &(&a_m - &b_m)))
        + prev.scale(&(&two * &(alpha.pow(m - 1) - beta.pow(m - 1))))
        + prev2.scale(&diff);
    Ok(expr.is_zero())
}
