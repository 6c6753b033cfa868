//! Exact-integer verification of the inequality chain behind the
//! Hamming-bound violation of the odd-sided square family.
//!
//! For each index `t` the full violation says the sphere count beats the
//! available space: `2^(4t) < sum_{j=0}^{t} C((2t+1)^2, j) * 3^j`. The chain
//! checked here derives that from elementary steps, each restated without
//! division so every comparison is between products of integers:
//!
//! 1. quadratic:  `16t < 3(4t^2 + 4t + 1)`
//! 2. power:      `2^(4t) * t^t < 3^t * (2t+1)^(2t)`
//! 3. binomial:   `C(n, t) * t^t >= n^t` for `t <= n`
//! 4. suffices:   `2^(4t) < C((2t+1)^2, t) * 3^t` — the single `j = t` term
//!    already exceeds the left side, so the full sum certainly does.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bounds::hamming_check;
use crate::comb::{binomial, power, CombError};
use crate::families::odd_family;

/// Verdicts of every link of the chain at one index `t`, plus the margin of
/// the full bound comparison for display.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainReport {
    pub t: u64,
    pub quadratic_ok: bool,
    pub power_ok: bool,
    pub binomial_ok: bool,
    pub suffices_ok: bool,
    pub full_violation_ok: bool,
    pub margin_bits: f64,
}

impl ChainReport {
    pub fn all_ok(&self) -> bool {
        self.quadratic_ok
            && self.power_ok
            && self.binomial_ok
            && self.suffices_ok
            && self.full_violation_ok
    }
}

/// `16t < 3(4t^2 + 4t + 1)`, equivalently `12t^2 - 4t + 3 > 0`.
pub fn lemma_quadratic(t: u64) -> bool {
    let t = BigUint::from(t);
    let lhs = 16u32 * &t;
    let rhs = 12u32 * (&t * &t) + 12u32 * &t + 3u32;
    lhs < rhs
}

/// `2^(4t) * t^t < 3^t * (2t+1)^(2t)`: the quadratic step raised to the
/// t-th power, cleared of denominators.
pub fn lemma_power(t: u64) -> bool {
    let four_t = t.checked_mul(4).expect("t out of range");
    let two_t = t.checked_mul(2).expect("t out of range");
    let lhs = power(2, four_t) * power(t, t);
    let rhs = power(3, t) * power(two_t + 1, two_t);
    lhs < rhs
}

/// `C(n, t) * t^t >= n^t`: the binomial lower bound, cleared of
/// denominators. Rejects `t > n`, where the coefficient vanishes.
pub fn lemma_binomial(n: u64, t: u64) -> Result<bool, CombError> {
    if t > n {
        return Err(CombError::RadiusExceedsLength { t, n });
    }
    Ok(binomial(n, t) * power(t, t) >= power(n, t))
}

/// `2^(4t) < C((2t+1)^2, t) * 3^t`: the weight-t term of the sphere alone
/// already exceeds the available space.
pub fn check_suffices(t: u64) -> bool {
    let side = t
        .checked_mul(2)
        .and_then(|x| x.checked_add(1))
        .expect("t out of range");
    let n = side.checked_mul(side).expect("t out of range");
    let four_t = 4 * t;
    power(2, four_t) < binomial(n, t) * power(3, t)
}

fn chain_report(t: u64) -> ChainReport {
    let params = odd_family(t).expect("t >= 1");
    let full = hamming_check(&params);

    let quadratic_ok = lemma_quadratic(t);
    let power_ok = lemma_power(t);
    let binomial_ok = lemma_binomial(params.n(), t).expect("t < n for this family");
    let suffices_ok = check_suffices(t);
    let full_violation_ok = !full.satisfied;

    // The chain must be self-consistent: each step implies the next. These
    // cannot fire for correct arithmetic; they guard the implementation.
    assert!(
        !(power_ok && binomial_ok) || suffices_ok,
        "power and binomial steps held at t = {t} but the combined step failed"
    );
    assert!(
        !suffices_ok || full_violation_ok,
        "single-term excess at t = {t} without a full violation"
    );

    ChainReport {
        t,
        quadratic_ok,
        power_ok,
        binomial_ok,
        suffices_ok,
        full_violation_ok,
        margin_bits: full.margin_bits,
    }
}

/// Evaluate the whole chain for every `t` in `1..=t_max`, in ascending
/// order. Indices are independent, so they are checked in parallel; the
/// output order is always ascending `t`.
pub fn verify_chain(t_max: u64) -> Vec<ChainReport> {
    (1..=t_max).into_par_iter().map(chain_report).collect()
}
