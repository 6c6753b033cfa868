//! Exact combinatorics on arbitrary-precision integers.
//!
//! Every quantity that decides a verdict elsewhere in the crate is computed
//! here as a [`BigUint`] and compared exactly. Floating point appears only in
//! [`log2_margin`], which exists so reports can say *by how many bits* a
//! comparison failed; it never feeds back into a verdict.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombError {
    /// A weight-limited sum was requested with a radius larger than the
    /// vector length; no such error pattern exists.
    #[error("sphere radius t = {t} exceeds length n = {n}")]
    RadiusExceedsLength { t: u64, n: u64 },
}

/// Binomial coefficient `C(n, k)`, exact.
///
/// Returns 0 when `k > n`, matching the usual combinatorial convention.
///
/// ```
/// use qhbound::comb::binomial;
/// assert_eq!(binomial(9, 2).to_string(), "36");
/// assert_eq!(binomial(3, 5).to_string(), "0");
/// ```
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    // Multiplicative form; after each step the accumulator is exactly
    // C(n, i+1), so every division is exact.
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Exact `base^exp` by binary exponentiation, with the convention `0^0 = 1`.
pub fn power(base: u64, exp: u64) -> BigUint {
    let mut result = BigUint::one();
    let mut square = BigUint::from(base);
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= &square;
        }
        e >>= 1;
        if e > 0 {
            square = &square * &square;
        }
    }
    result
}

/// Number of n-qubit Pauli errors of weight at most `t`:
/// `sum_{j=0}^{t} C(n, j) * 3^j`, exact.
///
/// Rejects `t > n`: a weight cannot exceed the number of qubits.
pub fn sphere_volume(n: u64, t: u64) -> Result<BigUint, CombError> {
    if t > n {
        return Err(CombError::RadiusExceedsLength { t, n });
    }
    let mut total = BigUint::one(); // j = 0 term
    let mut term = BigUint::one(); // C(n, j) * 3^j for the current j
    for j in 1..=t {
        // C(n, j) * 3^j = C(n, j-1) * 3^(j-1) * (n - j + 1) * 3 / j,
        // and the division is exact at every step.
        term = term * (n - j + 1) * 3u32 / j;
        total += &term;
    }
    Ok(total)
}

/// log2 of a positive integer, accurate to a few ulps.
fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    debug_assert!(bits > 0, "log2 of zero");
    let mantissa = u64::from(f64::MANTISSA_DIGITS);
    if bits <= mantissa {
        x.to_f64().expect("value fits in f64").log2()
    } else {
        // Keep the top 53 bits; the truncation error is far below the
        // documented 0.01-bit accuracy.
        let shift = bits - mantissa;
        let top = x >> usize::try_from(shift).expect("shift fits usize");
        top.to_f64().expect("53-bit value fits in f64").log2() + shift as f64
    }
}

/// Display-only margin `log2(rhs / lhs)` for positive integers.
///
/// Accurate to well within 0.01 bits, and the sign always agrees with the
/// exact ordering of the inputs — when the ratio is too close to 1 for a
/// float to resolve, the result is nudged to the smallest value of the
/// correct sign rather than collapsing to 0. Verdicts must come from exact
/// comparisons, never from this value.
pub fn log2_margin(lhs: &BigUint, rhs: &BigUint) -> f64 {
    debug_assert!(!lhs.is_zero() && !rhs.is_zero(), "margin of zero quantity");
    match lhs.cmp(rhs) {
        Ordering::Equal => 0.0,
        Ordering::Less => (log2_big(rhs) - log2_big(lhs)).max(f64::MIN_POSITIVE),
        Ordering::Greater => -(log2_big(lhs) - log2_big(rhs)).max(f64::MIN_POSITIVE),
    }
}
