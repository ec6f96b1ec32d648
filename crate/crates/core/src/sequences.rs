//! Balancing numbers `B_n` and Lucas-balancing numbers `C_n`.
//!
//! Both satisfy `x_n = 6 x_{n-1} - x_{n-2}`; `B` starts `0, 1` and `C` starts `1, 3`.
//! `B_n` is computed three ways (recurrence, matrix power, Binet form in Q(√2))
//! so each path can serve as an oracle for the others.

use num_traits::{One, Zero};

use crate::arith::{Integer, QuadElem};

/// Which of the two sequences to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sequence {
    Balancing,
    LucasBalancing,
}

impl Sequence {
    fn seeds(self) -> (Integer, Integer) {
        match self {
            Sequence::Balancing => (Integer::zero(), Integer::one()),
            Sequence::LucasBalancing => (Integer::one(), Integer::from(3)),
        }
    }
}

/// Values `x_0..=x_N` of one sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqTable {
    seq: Sequence,
    values: Vec<Integer>,
}

impl SeqTable {
    pub fn new(seq: Sequence, upto: usize) -> Self {
        let (x0, x1) = seq.seeds();
        let mut values = Vec::with_capacity(upto + 1);
        values.push(x0);
        if upto >= 1 {
            values.push(x1);
        }
        for n in 2..=upto {
            let next = Integer::from(6) * &values[n - 1] - &values[n - 2];
            values.push(next);
        }
        SeqTable { seq, values }
    }

    pub fn balancing(upto: usize) -> Self {
        SeqTable::new(Sequence::Balancing, upto)
    }

    pub fn lucas_balancing(upto: usize) -> Self {
        SeqTable::new(Sequence::LucasBalancing, upto)
    }

    pub fn sequence(&self) -> Sequence {
        self.seq
    }

    pub fn get(&self, n: usize) -> Option<&Integer> {
        self.values.get(n)
    }

    pub fn values(&self) -> &[Integer] {
        &self.values
    }

    pub fn upto(&self) -> usize {
        self.values.len() - 1
    }
}

impl std::ops::Index<usize> for SeqTable {
    type Output = Integer;

    fn index(&self, n: usize) -> &Integer {
        &self.values[n]
    }
}

fn iterate(seq: Sequence, n: u64) -> Integer {
    let (mut prev, mut cur) = seq.seeds();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = Integer::from(6) * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `B_n` by the three-term recurrence.
pub fn balancing(n: u64) -> Integer {
    iterate(Sequence::Balancing, n)
}

/// `C_n` by the three-term recurrence.
pub fn lucas_balancing(n: u64) -> Integer {
    iterate(Sequence::LucasBalancing, n)
}

type Mat2 = [[Integer; 2]; 2];

fn mat_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    let cell = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]]
}

/// `[[6, -1], [1, 0]]^n = [[B_{n+1}, -B_n], [B_n, -B_{n-1}]]`
fn step_matrix_pow(mut n: u64) -> Mat2 {
    let one = Integer::one;
    let zero = Integer::zero;
    let mut base: Mat2 = [[Integer::from(6), -one()], [one(), zero()]];
    let mut acc: Mat2 = [[one(), zero()], [zero(), one()]];
    while n > 0 {
        if n & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        n >>= 1;
        if n > 0 {
            base = mat_mul(&base, &base);
        }
    }
    acc
}

/// `B_n` in `O(log n)` multiplications, read off the lower-left entry of the
/// step-matrix power.
pub fn balancing_fast(n: u64) -> Integer {
    let [_, [b_n, _]] = step_matrix_pow(n);
    b_n
}

/// `C_n = (B_{n+1} − B_{n−1})/2`, half the trace of the step-matrix power.
pub fn lucas_balancing_fast(n: u64) -> Integer {
    let [[top, _], [_, bottom]] = step_matrix_pow(n);
    (top + bottom) / Integer::from(2)
}

/// `B_n` from the Binet form.
///
/// With `α^n = a + b√2` we have `β^n = a − b√2`, so
/// `(α^n − β^n)/(4√2) = 2b√2/(4√2) = b/2`.
pub fn balancing_binet(n: u64) -> Integer {
    let power = QuadElem::alpha().pow(n);
    let b = power
        .b
        .to_integer()
        .expect("powers of 3 + 2√2 have integer coordinates");
    b / Integer::from(2)
}

/// `C_n` is the rational part of `α^n`.
pub fn lucas_balancing_binet(n: u64) -> Integer {
    QuadElem::alpha()
        .pow(n)
        .a
        .to_integer()
        .expect("powers of 3 + 2√2 have integer coordinates")
}

/// First `count` power-series coefficients of `z/(1 − 6z + z²)`.
pub fn gf_coefficients(count: usize) -> Vec<Integer> {
    let mut out: Vec<Integer> = Vec::with_capacity(count);
    for n in 0..count {
        let c = match n {
            0 => Integer::zero(),
            1 => Integer::one(),
            _ => Integer::from(6) * &out[n - 1] - &out[n - 2],
        };
        out.push(c);
    }
    out
}

/// Product of two power series truncated to `len` coefficients.
pub fn series_mul_truncated(p: &[Integer], q: &[Integer], len: usize) -> Vec<Integer> {
    let mut out = vec![Integer::zero(); len];
    for (i, a) in p.iter().enumerate().take(len) {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate().take(len - i) {
            out[i + j] += a * b;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const LISTED: [i64; 11] = [
        0, 1, 6, 35, 204, 1189, 6930, 40391, 235416, 1372105, 7997214,
    ];

    fn ints(xs: &[i64]) -> Vec<Integer> {
        xs.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn listed_values() {
        assert_eq!(balancing(0), Integer::from(0));
        assert_eq!(balancing(6), Integer::from(6930));
        assert_eq!(balancing(10), Integer::from(7997214));
        assert_eq!(balancing_fast(5), Integer::from(1189));
        assert_eq!(balancing_fast(0), Integer::from(0));
        assert_eq!(SeqTable::balancing(10).values(), ints(&LISTED).as_slice());
    }

    #[test]
    fn lucas_values() {
        assert_eq!(lucas_balancing(0), Integer::from(1));
        assert_eq!(lucas_balancing(1), Integer::from(3));
        assert_eq!(lucas_balancing(2), Integer::from(17));
        assert_eq!(
            Integer::from(6) * balancing(2) - Integer::from(2) * balancing(1),
            Integer::from(34)
        );
    }

    #[test]
    fn binet_small() {
        assert_eq!(balancing_binet(0), Integer::from(0));
        assert_eq!(balancing_binet(1), Integer::from(1));
        assert_eq!(balancing_binet(2), Integer::from(6));
    }

    #[test]
    fn fast_matches_recurrence_at_64() {
        assert_eq!(balancing_fast(64), balancing(64));
    }

    #[test]
    fn lucas_methods_agree() {
        for n in 0..=60 {
            assert_eq!(lucas_balancing_fast(n), lucas_balancing(n), "n={n}");
            assert_eq!(lucas_balancing_binet(n), lucas_balancing(n), "n={n}");
        }
    }

    #[test]
    fn gf_prefix() {
        assert_eq!(gf_coefficients(1), ints(&[0]));
        assert_eq!(gf_coefficients(3), ints(&[0, 1, 6]));
        assert_eq!(gf_coefficients(11), ints(&LISTED));
        assert!(gf_coefficients(0).is_empty());
    }

    #[test]
    fn seq_table_edges() {
        let t = SeqTable::balancing(0);
        assert_eq!(t.values(), ints(&[0]).as_slice());
        assert_eq!(t.upto(), 0);
        assert_eq!(
            SeqTable::lucas_balancing(3).values(),
            ints(&[1, 3, 17, 99]).as_slice()
        );
        assert!(t.get(1).is_none());
    }
}
