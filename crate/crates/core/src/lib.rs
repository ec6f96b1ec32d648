//! Exact arithmetic for balancing numbers `B_n` (`0, 1, 6, 35, 204, …`, OEIS A001109).
//!
//! * [`arith`]: big integers, canonical rationals and Q(√2).
//! * [`sequences`]: `B_n` and the companion `C_n`, each by several independent methods.
//! * [`linearize`]: `B_n^l` as a rational combination of `B_{jn}` and `B_{j(n+1)}`.
//! * [`summation`]: closed forms for `Σ_{0≤k≤n} B_{km}^l`.
//! * [`laurent`]: Laurent polynomials over Q(√2) that prove the identities above
//!   for every `n` at once.

pub mod arith;
pub mod error;
pub mod laurent;
pub mod linearize;
mod render;
pub mod sequences;
pub mod summation;

pub use arith::{binomial, Integer, QuadElem, Rational};
pub use error::{Error, Result};
pub use laurent::{
    verify_even_theorem, verify_lemma_identity, verify_linear_form, verify_odd_theorem, LaurentPoly,
};
pub use linearize::{
    evaluate_linear_form, linearize, linearize_even, linearize_odd, LinearForm, TermKey,
};
pub use sequences::{
    balancing, balancing_binet, balancing_fast, gf_coefficients, lucas_balancing,
    lucas_balancing_binet, lucas_balancing_fast, SeqTable, Sequence,
};
pub use summation::{
    brute_force_power_sum, closed_sum, gf_params, power_sum, power_sum_formula, shifted_closed_sum,
    subsequence_gf_check, BTerm, ClosedSumExpr, GFParams,
};
