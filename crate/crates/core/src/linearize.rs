//! Linearization of powers: `B_n^l` as a rational combination of `B_{jn}`,
//! `B_{j(n+1)}` and a constant.
//!
//! Odd powers:
//!
//! ```text
//! B_n^{2l+1} = 2^{-5l} Σ_{0≤s≤l} (-1)^s C(2l+1, s) B_{(2(l-s)+1)n}
//! ```
//!
//! Even powers, with `j = 2(l-s)`:
//!
//! ```text
//! B_n^{2l} = 2^{-5l} Σ_{0≤s<l} (-1)^s C(2l, s) [ 2(B_{jn} + B_{j(n+1)})/B_j − B_j B_{jn}/B_{l-s}² ]
//!          + 2^{-5l} (-1)^l C(2l, l)
//! ```
//!
//! The constant term carries the `2^{-5l}` factor as well; without it the
//! identity already fails at `l = 1, n = 1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{binomial, sign_pow, Integer, Rational};
use crate::error::{invalid, Error, Result};
use crate::render::render_sum;
use crate::sequences::{balancing, balancing_fast};

/// Identifies the term `B_{multiplier·(n + shift)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TermKey {
    pub multiplier: u64,
    /// 0 or 1.
    pub shift: u8,
}

impl TermKey {
    pub fn new(multiplier: u64, shift: u8) -> Self {
        debug_assert!(shift <= 1);
        TermKey { multiplier, shift }
    }

    /// The `B` index this term refers to at a given `n`.
    pub fn index_at(&self, n: u64) -> u64 {
        self.multiplier * (n + self.shift as u64)
    }

    fn label(&self) -> String {
        match (self.multiplier, self.shift) {
            (1, 0) => "B(n)".to_string(),
            (j, 0) => format!("B({j}n)"),
            (1, _) => "B(n+1)".to_string(),
            (j, _) => format!("B({j}(n+1))"),
        }
    }
}

// multiplier descending, then shift ascending
impl Ord for TermKey {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .multiplier
            .cmp(&self.multiplier)
            .then(self.shift.cmp(&other.shift))
    }
}

impl PartialOrd for TermKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `constant + Σ coeff·B_{multiplier·(n+shift)}`, standing for `B_n^power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    power: u64,
    constant: Rational,
    terms: BTreeMap<TermKey, Rational>,
}

impl LinearForm {
    fn empty(power: u64) -> Self {
        LinearForm {
            power,
            constant: Rational::zero(),
            terms: BTreeMap::new(),
        }
    }

    /// Adds `coeff` to the coefficient at `key`, dropping the key if it cancels.
    fn add_term(&mut self, key: TermKey, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn power(&self) -> u64 {
        self.power
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn coefficient(&self, key: TermKey) -> Option<&Rational> {
        self.terms.get(&key)
    }

    /// Terms in canonical order (multiplier descending, shift ascending).
    pub fn terms(&self) -> impl Iterator<Item = (TermKey, &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Same terms with a different constant.
    pub fn with_constant(&self, constant: Rational) -> Self {
        LinearForm {
            constant,
            ..self.clone()
        }
    }

    /// Exact rational value `constant + Σ coeff·B_{j(n+s)}`.
    pub fn value_at(&self, n: u64) -> Rational {
        let mut acc = self.constant.clone();
        for (key, coeff) in &self.terms {
            acc += coeff * &Rational::from(balancing_fast(key.index_at(n)));
        }
        acc
    }

    /// The integer `B_n^power`; a fractional value is reported as an inconsistency.
    pub fn evaluate(&self, n: u64) -> Result<Integer> {
        let value = self.value_at(n);
        value.to_integer().ok_or_else(|| {
            Error::Inconsistent(format!(
                "linear form for power {} evaluates to non-integer {value} at n = {n}",
                self.power
            ))
        })
    }

    pub fn render(&self) -> String {
        render_sum(
            self.terms
                .iter()
                .map(|(k, c)| (c, Some(k.label())))
                .chain(std::iter::once((&self.constant, None))),
        )
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    multiplier: u64,
    shift: u8,
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct LinearFormWire {
    power: u64,
    constant: Rational,
    terms: Vec<TermWire>,
}

impl Serialize for LinearForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LinearFormWire {
            power: self.power,
            constant: self.constant.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TermWire {
                    multiplier: k.multiplier,
                    shift: k.shift,
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LinearForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = LinearFormWire::deserialize(deserializer)?;
        let mut form = LinearForm::empty(wire.power);
        form.constant = wire.constant;
        for t in wire.terms {
            if t.shift > 1 {
                return Err(D::Error::custom("shift must be 0 or 1"));
            }
            if t.multiplier == 0 {
                return Err(D::Error::custom("multiplier must be positive"));
            }
            form.add_term(TermKey::new(t.multiplier, t.shift), t.coeff);
        }
        Ok(form)
    }
}

fn pow2(e: u64) -> Integer {
    Integer::from(1) << e
}

/// `B_n^{2l+1}`.
pub fn linearize_odd(l: u64) -> LinearForm {
    let scale = pow2(5 * l);
    let mut form = LinearForm::empty(2 * l + 1);
    for s in 0..=l {
        let coeff = Rational::new(sign_pow(s) * binomial(2 * l + 1, s), scale.clone())
            .expect("power of two is nonzero");
        form.add_term(TermKey::new(2 * (l - s) + 1, 0), coeff);
    }
    form
}

/// `B_n^{2l}` for `l ≥ 1`.
pub fn linearize_even(l: u64) -> Result<LinearForm> {
    if l == 0 {
        return Err(invalid("l", l, "even linearization needs l >= 1"));
    }
    let scale = Rational::from(pow2(5 * l));
    let mut form = LinearForm::empty(2 * l);
    for s in 0..l {
        let j = 2 * (l - s);
        let b_j = Rational::from(balancing(j));
        let b_half = Rational::from(balancing(l - s));
        let signed_binom = Rational::from(sign_pow(s) * binomial(2 * l, s));

        let paired = Rational::from(2) * &signed_binom / (&scale * &b_j);
        form.add_term(TermKey::new(j, 0), paired.clone());
        form.add_term(TermKey::new(j, 1), paired);

        // (-1)^{s-1} = -(-1)^s
        let single = -(&signed_binom * &b_j) / (&scale * &b_half * &b_half);
        form.add_term(TermKey::new(j, 0), single);
    }
    form.constant = Rational::from(sign_pow(l) * binomial(2 * l, l)) / scale;
    Ok(form)
}

/// `B_n^l` for `l ≥ 1`, dispatching on parity.
pub fn linearize(l: u64) -> Result<LinearForm> {
    match l {
        0 => Err(invalid("l", l, "power must be at least 1")),
        l if l % 2 == 1 => Ok(linearize_odd((l - 1) / 2)),
        l => linearize_even(l / 2),
    }
}

/// `constant + Σ coeff·B_{j(n+s)}` evaluated as an integer.
pub fn evaluate_linear_form(form: &LinearForm, n: u64) -> Result<Integer> {
    form.evaluate(n)
}

/// True when `form` evaluates to zero at `n = 0` with every `B` term vanishing there.
pub fn vanishes_at_zero(form: &LinearForm) -> bool {
    form.value_at(0).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn odd_l0_is_identity() {
        let f = linearize_odd(0);
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.coefficient(TermKey::new(1, 0)), Some(&Rational::one()));
        assert!(f.constant().is_zero());
        assert_eq!(f.render(), "B(n)");
    }

    #[test]
    fn odd_l1() {
        let f = linearize_odd(1);
        assert_eq!(f.coefficient(TermKey::new(3, 0)), Some(&r(1, 32)));
        assert_eq!(f.coefficient(TermKey::new(1, 0)), Some(&r(-3, 32)));
        assert_eq!(f.render(), "(1/32)*B(3n) - (3/32)*B(n)");
        assert_eq!(f.evaluate(2).unwrap(), Integer::from(216));
    }

    #[test]
    fn even_l1() {
        let f = linearize_even(1).unwrap();
        assert_eq!(f.coefficient(TermKey::new(2, 0)), Some(&r(-17, 96)));
        assert_eq!(f.coefficient(TermKey::new(2, 1)), Some(&r(1, 96)));
        assert_eq!(f.constant(), &r(-1, 16));
        assert_eq!(f.evaluate(0).unwrap(), Integer::from(0));
        assert_eq!(f.evaluate(1).unwrap(), Integer::from(1));
        assert_eq!(f.evaluate(2).unwrap(), Integer::from(36));
        assert_eq!(f.render(), "-(17/96)*B(2n) + (1/96)*B(2(n+1)) - 1/16");
    }

    #[test]
    fn typeset_constant_fails() {
        let f = linearize_even(1).unwrap();
        let typeset = f.with_constant(Rational::from(sign_pow(1) * binomial(2, 1)));
        assert_eq!(typeset.value_at(1), r(-15, 16));
        assert!(typeset.evaluate(1).is_err());
    }

    #[test]
    fn dispatch() {
        assert_eq!(linearize(1).unwrap(), linearize_odd(0));
        assert_eq!(linearize(3).unwrap(), linearize_odd(1));
        assert_eq!(linearize(2).unwrap(), linearize_even(1).unwrap());
        assert!(matches!(linearize(0), Err(Error::InvalidArgument { .. })));
        assert!(linearize_even(0).is_err());
    }

    #[test]
    fn evaluate_catches_bad_forms() {
        let mut f = LinearForm::empty(1);
        f.add_term(TermKey::new(1, 0), r(1, 2));
        assert!(matches!(f.evaluate(1), Err(Error::Inconsistent(_))));
        assert_eq!(
            LinearForm::empty(1)
                .with_constant(r(7, 1))
                .evaluate(0)
                .unwrap(),
            Integer::from(7)
        );
    }

    #[test]
    fn merging_drops_zero() {
        let mut f = LinearForm::empty(1);
        f.add_term(TermKey::new(2, 0), r(1, 3));
        f.add_term(TermKey::new(2, 0), r(-1, 3));
        assert_eq!(f.num_terms(), 0);
        assert_eq!(f.render(), "0");
    }

    #[test]
    fn json_shape() {
        let f = linearize(3).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"power":3,"constant":"0","terms":[{"multiplier":3,"shift":0,"coeff":"1/32"},{"multiplier":1,"shift":0,"coeff":"-3/32"}]}"#
        );
        let back: LinearForm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<LinearForm>(
            r#"{"power":1,"constant":"0","terms":[{"multiplier":1,"shift":2,"coeff":"1"}]}"#
        )
        .is_err());
    }

    #[test]
    fn term_order() {
        let f = linearize(4).unwrap();
        let keys: Vec<_> = f.terms().map(|(k, _)| (k.multiplier, k.shift)).collect();
        assert_eq!(keys, vec![(4, 0), (4, 1), (2, 0), (2, 1)]);
    }
}
