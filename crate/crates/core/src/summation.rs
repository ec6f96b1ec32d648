//! Closed forms for partial sums `Σ_{0≤k≤n} B_{km}^l`.
//!
//! The generating function of an equally spaced subsequence is
//! `Σ_k B_{km} z^k = B_m z / (1 − (6B_m − 2B_{m−1}) z + z²)`, and `6B_m − 2B_{m−1} = 2C_m`.
//! Dividing by `1 − z` and splitting into partial fractions gives
//!
//! ```text
//! Σ_{0≤k≤n} B_{km+r} = (B_{m(n+1)+r} − B_{mn+r} − B_{m+r} + B_r) / (2C_m − 2) + B_r
//! ```
//!
//! which is the plain equally spaced sum when `r = 0`. Power sums follow by
//! linearizing `B^l` and summing every term separately.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{Integer, Rational};
use crate::error::{invalid, Error, Result};
use crate::linearize::linearize;
use crate::render::{affine_index, render_sum};
use crate::sequences::{
    balancing, balancing_fast, lucas_balancing, series_mul_truncated, SeqTable,
};

/// Numerator and middle denominator coefficient of the subsequence generating function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GFParams {
    /// `B_m`
    pub numer: Integer,
    /// `6B_m − 2B_{m−1}`
    pub middle: Integer,
    pub m: u64,
}

impl GFParams {
    /// `middle − 2 = 2C_m − 2`, the denominator of the partial-sum closed form.
    pub fn sum_denominator(&self) -> Integer {
        &self.middle - Integer::from(2)
    }
}

fn check_m(m: u64) -> Result<()> {
    if m == 0 {
        return Err(invalid("m", m, "spacing must be at least 1"));
    }
    Ok(())
}

pub fn gf_params(m: u64) -> Result<GFParams> {
    check_m(m)?;
    let numer = balancing(m);
    let middle = Integer::from(6) * &numer - Integer::from(2) * balancing(m - 1);
    Ok(GFParams { numer, middle, m })
}

/// Checks `(1 − middle·z + z²)·Σ_{k≤N} B_{km} z^k = B_m z` coefficient by
/// coefficient through degree `N`.
pub fn subsequence_gf_check(m: u64, big_n: usize) -> Result<bool> {
    let params = gf_params(m)?;
    if big_n < 2 {
        return Err(invalid("N", big_n as u64, "need at least two terms"));
    }
    let table = SeqTable::balancing(big_n * m as usize);
    let series: Vec<Integer> = (0..=big_n).map(|k| table[k * m as usize].clone()).collect();
    let denom = [Integer::one(), -params.middle.clone(), Integer::one()];
    let product = series_mul_truncated(&denom, &series, big_n + 1);
    let ok = product.iter().enumerate().all(|(deg, c)| match deg {
        1 => *c == params.numer,
        _ => c.is_zero(),
    });
    Ok(ok)
}

fn exact_div(num: Integer, den: &Integer, what: &str) -> Result<Integer> {
    if (&num % den).is_zero() {
        Ok(num / den)
    } else {
        Err(Error::Inconsistent(format!(
            "{what}: {num} is not divisible by {den}"
        )))
    }
}

/// `Σ_{0≤k≤n} B_{km}`.
pub fn closed_sum(m: u64, n: u64) -> Result<Integer> {
    let params = gf_params(m)?;
    let num = balancing_fast(m * (n + 1)) - balancing_fast(m * n) - &params.numer;
    exact_div(num, &params.sum_denominator(), "closed_sum")
}

/// `Σ_{0≤k≤n} B_{km+r}`.
pub fn shifted_closed_sum(m: u64, r: u64, n: u64) -> Result<Integer> {
    let params = gf_params(m)?;
    let b_r = balancing_fast(r);
    let num =
        balancing_fast(m * (n + 1) + r) - balancing_fast(m * n + r) - balancing_fast(m + r) + &b_r;
    Ok(exact_div(num, &params.sum_denominator(), "shifted_closed_sum")? + b_r)
}

fn check_power(l: u64) -> Result<()> {
    if l == 0 {
        return Err(invalid("l", l, "power must be at least 1"));
    }
    Ok(())
}

/// `Σ_{0≤k≤n} B_{km}^l` via linearization and the shifted closed sum.
///
/// A term `c·B_{j(k+s)}` of the linearized `B_k^l` becomes `c·B_{(jm)k + js}`
/// after the substitution `n → km`.
pub fn power_sum(m: u64, l: u64, n: u64) -> Result<Integer> {
    check_m(m)?;
    let form = linearize(l)?;
    let mut acc = form.constant() * &Rational::from(Integer::from(n + 1));
    for (key, coeff) in form.terms() {
        let stride = key.multiplier * m;
        let offset = key.multiplier * key.shift as u64;
        acc += coeff * &Rational::from(shifted_closed_sum(stride, offset, n)?);
    }
    acc.to_integer().ok_or_else(|| {
        Error::Inconsistent(format!(
            "power_sum(m={m}, l={l}, n={n}) is the non-integer {acc}"
        ))
    })
}

/// `Σ_{0≤k≤n} B_{km}^l` by direct addition.
pub fn brute_force_power_sum(m: u64, l: u64, n: u64) -> Result<Integer> {
    check_m(m)?;
    check_power(l)?;
    let table = SeqTable::balancing((n * m) as usize);
    let exp = u32::try_from(l).map_err(|_| invalid("l", l, "power too large"))?;
    Ok((0..=n as usize)
        .map(|k| num_traits::pow::Pow::pow(&table[k * m as usize], exp))
        .sum())
}

/// `coeff·B_{stride·n + offset}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BTerm {
    pub coeff: Rational,
    pub stride: u64,
    pub offset: i64,
}

/// A closed form in `n`: `Σ coeff·B_{stride·n+offset} + linear_coeff·(n+1) + constant`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedSumExpr {
    pub m: u64,
    pub power: u64,
    pub bterms: Vec<BTerm>,
    pub linear_coeff: Rational,
    pub constant: Rational,
}

impl ClosedSumExpr {
    /// Exact value of the expression at `n`.
    pub fn value_at(&self, n: u64) -> Result<Rational> {
        let mut acc = &self.linear_coeff * &Rational::from(Integer::from(n + 1)) + &self.constant;
        for t in &self.bterms {
            let idx = t.stride as i128 * n as i128 + t.offset as i128;
            let idx = u64::try_from(idx)
                .map_err(|_| invalid("index", idx, "balancing index must be non-negative"))?;
            acc += &t.coeff * &Rational::from(balancing_fast(idx));
        }
        Ok(acc)
    }

    pub fn evaluate(&self, n: u64) -> Result<Integer> {
        let v = self.value_at(n)?;
        v.to_integer().ok_or_else(|| {
            Error::Inconsistent(format!(
                "closed form for m={}, l={} is the non-integer {v} at n = {n}",
                self.m, self.power
            ))
        })
    }

    pub fn render(&self) -> String {
        let bterms = self.bterms.iter().map(|t| {
            (
                &t.coeff,
                Some(format!("B({})", affine_index(t.stride, t.offset))),
            )
        });
        let tail = [
            (&self.linear_coeff, Some("(n+1)".to_string())),
            (&self.constant, None),
        ];
        render_sum(bterms.chain(tail))
    }
}

impl fmt::Display for ClosedSumExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Symbolic closed form of `Σ_{0≤k≤n} B_{km}^l`.
///
/// B-terms with equal `(stride, offset)` are merged and listed by stride, then
/// offset, both descending.
pub fn power_sum_formula(m: u64, l: u64) -> Result<ClosedSumExpr> {
    check_m(m)?;
    let form = linearize(l)?;
    // keyed by (stride, offset); reversed at the end for descending order
    let mut bterms: BTreeMap<(u64, i64), Rational> = BTreeMap::new();
    let mut constant = Rational::zero();
    let mut add = |stride: u64, offset: u64, c: Rational| {
        let e = bterms
            .entry((stride, offset as i64))
            .or_insert_with(Rational::zero);
        *e += c;
    };

    for (key, coeff) in form.terms() {
        let stride = key.multiplier * m;
        let r = key.multiplier * key.shift as u64;
        let den = Rational::from(Integer::from(2) * lucas_balancing(stride) - Integer::from(2));
        let scaled = coeff / &den;
        add(stride, stride + r, scaled.clone());
        add(stride, r, -&scaled);
        let b_r = Rational::from(balancing(r));
        let b_mr = Rational::from(balancing(stride + r));
        constant += &scaled * &(&b_r - &b_mr) + coeff * &b_r;
    }

    let bterms = bterms
        .into_iter()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|((stride, offset), coeff)| BTerm {
            coeff,
            stride,
            offset,
        })
        .collect();

    Ok(ClosedSumExpr {
        m,
        power: l,
        bterms,
        linear_coeff: form.constant().clone(),
        constant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(x: i64) -> Integer {
        Integer::from(x)
    }

    #[test]
    fn params() {
        let p = gf_params(1).unwrap();
        assert_eq!((p.numer, p.middle), (int(1), int(6)));
        let p = gf_params(2).unwrap();
        assert_eq!((p.numer, p.middle), (int(6), int(34)));
        let p = gf_params(3).unwrap();
        assert_eq!((p.numer.clone(), p.middle.clone()), (int(35), int(198)));
        assert_eq!(p.sum_denominator(), int(196));
        assert!(gf_params(0).is_err());
    }

    #[test]
    fn gf_checks() {
        assert!(subsequence_gf_check(1, 10).unwrap());
        assert!(subsequence_gf_check(2, 10).unwrap());
        assert!(subsequence_gf_check(5, 8).unwrap());
        assert!(subsequence_gf_check(2, 1).is_err());
        assert!(subsequence_gf_check(0, 5).is_err());
    }

    #[test]
    fn closed_sums() {
        assert_eq!(closed_sum(1, 4).unwrap(), int(246));
        assert_eq!(closed_sum(1, 0).unwrap(), int(0));
        assert_eq!(closed_sum(2, 2).unwrap(), int(210));
        assert!(closed_sum(0, 3).is_err());
    }

    #[test]
    fn shifted_sums() {
        assert_eq!(shifted_closed_sum(2, 1, 1).unwrap(), int(36));
        // B_0 + B_3 + B_6
        assert_eq!(shifted_closed_sum(3, 0, 2).unwrap(), int(6965));
        assert_eq!(
            shifted_closed_sum(3, 0, 2).unwrap(),
            closed_sum(3, 2).unwrap()
        );
        assert_eq!(shifted_closed_sum(1, 0, 0).unwrap(), int(0));
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum(1, 3, 2).unwrap(), int(217));
        assert_eq!(power_sum(1, 2, 2).unwrap(), int(37));
        assert_eq!(power_sum(2, 2, 2).unwrap(), int(41652));
        assert!(power_sum(1, 0, 2).is_err());
        assert!(power_sum(0, 1, 2).is_err());
    }

    #[test]
    fn brute_force() {
        assert_eq!(brute_force_power_sum(1, 1, 4).unwrap(), int(246));
        assert_eq!(brute_force_power_sum(2, 1, 2).unwrap(), int(210));
        assert_eq!(brute_force_power_sum(1, 5, 0).unwrap(), int(0));
    }

    #[test]
    fn formula_m1_l1() {
        let f = power_sum_formula(1, 1).unwrap();
        assert_eq!(f.render(), "(1/4)*B(n+1) - (1/4)*B(n) - 1/4");
        assert_eq!(f.evaluate(4).unwrap(), int(246));
        assert_eq!(
            power_sum_formula(1, 2).unwrap().evaluate(0).unwrap(),
            int(0)
        );
    }

    #[test]
    fn formula_m2_l1() {
        let f = power_sum_formula(2, 1).unwrap();
        assert_eq!(f.render(), "(1/32)*B(2n+2) - (1/32)*B(2n) - 3/16");
    }

    #[test]
    fn negative_index_rejected() {
        let f = ClosedSumExpr {
            m: 1,
            power: 1,
            bterms: vec![BTerm {
                coeff: Rational::one(),
                stride: 1,
                offset: -1,
            }],
            linear_coeff: Rational::zero(),
            constant: Rational::zero(),
        };
        assert_eq!(f.evaluate(1).unwrap(), int(0));
        assert!(f.evaluate(0).is_err());
    }

    #[test]
    fn json_shape() {
        let f = power_sum_formula(1, 1).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"m":1,"power":1,"bterms":[{"coeff":"1/4","stride":1,"offset":1},{"coeff":"-1/4","stride":1,"offset":0}],"linear_coeff":"0","constant":"-1/4"}"#
        );
        let back: ClosedSumExpr = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }
}
