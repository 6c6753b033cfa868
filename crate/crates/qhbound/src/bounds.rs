//! Hamming and Singleton bound checks for subsystem-code parameters.
//!
//! Both checks compare exact integers and report the two sides, the verdict,
//! and a display-only margin in bits. A bound that holds with equality is
//! satisfied.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::comb::{log2_margin, power, sphere_volume};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("n must be at least 1")]
    EmptyCode,
    #[error("distance must satisfy 1 <= d <= n (d = {d}, n = {n})")]
    DistanceRange { d: u64, n: u64 },
    #[error("k + r must not exceed n (k = {k}, r = {r}, n = {n})")]
    LogicalGaugeOverflow { k: u64, r: u64, n: u64 },
}

/// A validated `[[n, k, r, d]]` parameter quadruple: `n` physical qubits,
/// `k` logical qubits, `r` gauge qubits, minimum distance `d`.
///
/// Construction enforces `n >= 1`, `1 <= d <= n` and `k + r <= n`, so a
/// value of this type is always internally consistent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeParams {
    n: u64,
    k: u64,
    r: u64,
    d: u64,
}

impl CodeParams {
    pub fn new(n: u64, k: u64, r: u64, d: u64) -> Result<Self, ParamsError> {
        if n == 0 {
            return Err(ParamsError::EmptyCode);
        }
        if d == 0 || d > n {
            return Err(ParamsError::DistanceRange { d, n });
        }
        if k.checked_add(r).map_or(true, |kr| kr > n) {
            return Err(ParamsError::LogicalGaugeOverflow { k, r, n });
        }
        Ok(Self { n, k, r, d })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// `floor((d - 1) / 2)`: the radius of the error sphere a distance-d
    /// code must pack.
    pub fn packing_radius(&self) -> u64 {
        (self.d - 1) / 2
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{},{}]]", self.n, self.k, self.r, self.d)
    }
}

/// Which bound a report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Hamming,
    Singleton,
}

/// Outcome of one bound evaluation.
///
/// `satisfied` is decided by the exact comparison `lhs >= rhs`; `margin_bits`
/// is `log2(rhs / lhs)` for display (positive means the right side is
/// larger, i.e. the bound is missed by that many bits). The Singleton check
/// clamps a negative left side to 0 for reporting and says so in `note`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub params: CodeParams,
    pub bound: Bound,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub satisfied: bool,
    pub margin_bits: f64,
    pub note: Option<String>,
}

fn join_notes(notes: Vec<String>) -> Option<String> {
    if notes.is_empty() {
        None
    } else {
        Some(notes.join("; "))
    }
}

/// Quantum Hamming bound for pure subsystem codes:
/// `2^(n-k-r) >= sum_{j=0}^{floor((d-1)/2)} C(n, j) * 3^j`.
///
/// Equality satisfies the bound. The check is evaluated for any valid
/// parameters, including `k = 0` and distances with packing radius 0; those
/// cases carry an explanatory note.
pub fn hamming_check(p: &CodeParams) -> BoundReport {
    let lhs = power(2, p.n - p.k - p.r);
    let t = p.packing_radius();
    // t <= (n - 1) / 2 < n because d <= n, so this cannot fail.
    let rhs = sphere_volume(p.n, t).expect("packing radius is below n");
    let satisfied = lhs >= rhs;
    let margin_bits = log2_margin(&lhs, &rhs);

    let mut notes = Vec::new();
    if p.k == 0 {
        notes.push("k = 0: the code encodes no logical qubits".to_owned());
    }
    if t == 0 {
        notes.push(format!(
            "d = {} gives packing radius 0: only the identity is counted",
            p.d
        ));
    }

    BoundReport {
        params: *p,
        bound: Bound::Hamming,
        lhs,
        rhs,
        satisfied,
        margin_bits,
        note: join_notes(notes),
    }
}

/// Quantum Singleton bound for subsystem codes: `k + r <= n - 2(d - 1)`.
///
/// The verdict is decided in signed arithmetic; for reporting, a negative
/// `n - 2(d - 1)` is clamped to 0 and noted (the bound is then necessarily
/// unsatisfied, since `k + r >= 0`).
pub fn singleton_check(p: &CodeParams) -> BoundReport {
    let slack = i128::from(p.n) - 2 * (i128::from(p.d) - 1);
    let kr = i128::from(p.k) + i128::from(p.r);
    let satisfied = kr <= slack;

    let lhs = if slack >= 0 {
        BigUint::from(slack as u128)
    } else {
        BigUint::zero()
    };
    let rhs = BigUint::from(p.k + p.r);

    let margin_bits = match (lhs.is_zero(), rhs.is_zero()) {
        (false, false) => log2_margin(&lhs, &rhs),
        (true, true) => 0.0,
        (true, false) => f64::INFINITY,
        (false, true) => f64::NEG_INFINITY,
    };

    let mut notes = Vec::new();
    if p.k == 0 {
        notes.push("k = 0: the code encodes no logical qubits".to_owned());
    }
    if slack < 0 {
        notes.push(format!(
            "n - 2(d - 1) = {slack} is negative; reported lhs clamped to 0"
        ));
    }

    BoundReport {
        params: *p,
        bound: Bound::Singleton,
        lhs,
        rhs,
        satisfied,
        margin_bits,
        note: join_notes(notes),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn params(n: u64, k: u64, r: u64, d: u64) -> CodeParams {
        CodeParams::new(n, k, r, d).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn rejects_malformed_parameters() {
        assert_eq!(CodeParams::new(0, 0, 0, 1), Err(ParamsError::EmptyCode));
        assert_eq!(
            CodeParams::new(5, 1, 0, 0),
            Err(ParamsError::DistanceRange { d: 0, n: 5 })
        );
        assert_eq!(
            CodeParams::new(5, 1, 0, 6),
            Err(ParamsError::DistanceRange { d: 6, n: 5 })
        );
        assert_eq!(
            CodeParams::new(3, 1, 4, 3),
            Err(ParamsError::LogicalGaugeOverflow { k: 1, r: 4, n: 3 })
        );
        // k + r overflowing u64 must be rejected, not wrap.
        assert_eq!(
            CodeParams::new(10, u64::MAX, 2, 3),
            Err(ParamsError::LogicalGaugeOverflow {
                k: u64::MAX,
                r: 2,
                n: 10
            })
        );
    }

    #[test]
    fn display_is_the_bracket_quadruple() {
        assert_eq!(params(9, 1, 4, 3).to_string(), "[[9,1,4,3]]");
    }

    #[test]
    fn hamming_violated_for_nine_qubit_lattice_code() {
        let report = hamming_check(&params(9, 1, 4, 3));
        assert_eq!(report.lhs, big(16));
        assert_eq!(report.rhs, big(28));
        assert!(!report.satisfied);
        assert!((report.margin_bits - 0.807).abs() < 0.01);
    }

    #[test]
    fn hamming_violated_for_twelve_qubit_lattice_code() {
        let report = hamming_check(&params(12, 1, 6, 3));
        assert_eq!(report.lhs, big(32));
        assert_eq!(report.rhs, big(37));
        assert!(!report.satisfied);
    }

    #[test]
    fn hamming_equality_satisfies() {
        // The five-qubit code packs its distance-1 sphere exactly.
        let report = hamming_check(&params(5, 1, 0, 3));
        assert_eq!(report.lhs, big(16));
        assert_eq!(report.rhs, big(16));
        assert!(report.satisfied);
        assert_eq!(report.margin_bits, 0.0);
    }

    #[test]
    fn hamming_trivial_distance_is_noted() {
        let report = hamming_check(&params(1, 1, 0, 1));
        assert_eq!(report.lhs, big(1));
        assert_eq!(report.rhs, big(1));
        assert!(report.satisfied);
        assert!(report.note.as_deref().unwrap().contains("packing radius 0"));
    }

    #[test]
    fn hamming_accepts_zero_logical_qubits_with_note() {
        let report = hamming_check(&params(9, 0, 4, 3));
        assert!(report.note.as_deref().unwrap().contains("k = 0"));
        // lhs = 2^5 = 32, rhs = 28: satisfied once k is dropped.
        assert_eq!(report.lhs, big(32));
        assert!(report.satisfied);
    }

    #[test]
    fn singleton_tight_for_nine_qubit_lattice_code() {
        let report = singleton_check(&params(9, 1, 4, 3));
        assert_eq!(report.lhs, big(5));
        assert_eq!(report.rhs, big(5));
        assert!(report.satisfied);
        assert_eq!(report.margin_bits, 0.0);
    }

    #[test]
    fn singleton_slack_for_twelve_qubit_lattice_code() {
        let report = singleton_check(&params(12, 1, 6, 3));
        assert_eq!(report.lhs, big(8));
        assert_eq!(report.rhs, big(7));
        assert!(report.satisfied);
        assert!(report.margin_bits < 0.0);
    }

    #[test]
    fn singleton_tight_for_trivial_full_rate_code() {
        let report = singleton_check(&params(7, 7, 0, 1));
        assert_eq!(report.lhs, big(7));
        assert_eq!(report.rhs, big(7));
        assert!(report.satisfied);
    }

    #[test]
    fn singleton_negative_slack_is_clamped_and_noted() {
        // n - 2(d - 1) = 3 - 4 = -1.
        let report = singleton_check(&params(3, 1, 0, 3));
        assert_eq!(report.lhs, big(0));
        assert_eq!(report.rhs, big(1));
        assert!(!report.satisfied);
        assert!(report.note.as_deref().unwrap().contains("negative"));
        assert_eq!(report.margin_bits, f64::INFINITY);
    }

    #[test]
    fn singleton_negative_slack_with_zero_rate_is_still_unsatisfied() {
        // k + r = 0 but the true right side of the inequality is negative,
        // so the bound fails even though the clamped report shows 0 vs 0.
        let report = singleton_check(&params(3, 0, 0, 3));
        assert_eq!(report.lhs, big(0));
        assert_eq!(report.rhs, big(0));
        assert!(!report.satisfied);
        assert!(report.note.as_deref().unwrap().contains("negative"));
    }

    /// Strategy producing valid parameter quadruples with n capped.
    fn valid_params(max_n: u64) -> impl Strategy<Value = CodeParams> {
        (1..=max_n).prop_flat_map(move |n| {
            (Just(n), 0..=n, 1..=n).prop_flat_map(move |(n, k, d)| {
                (Just(n), Just(k), 0..=(n - k), Just(d))
                    .prop_map(|(n, k, r, d)| CodeParams::new(n, k, r, d).unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn hamming_depends_on_k_plus_r_not_the_split(p in valid_params(80)) {
            // Exchanging k and r moves qubits between logical and gauge
            // roles without changing the packing argument.
            let swapped = CodeParams::new(p.n(), p.r(), p.k(), p.d()).unwrap();
            let a = hamming_check(&p);
            let b = hamming_check(&swapped);
            prop_assert_eq!(a.lhs, b.lhs);
            prop_assert_eq!(a.rhs, b.rhs);
            prop_assert_eq!(a.satisfied, b.satisfied);
        }

        #[test]
        fn hamming_never_recovers_when_distance_grows(p in valid_params(80)) {
            // The sphere only grows with d, so an unsatisfied verdict stays
            // unsatisfied for every larger distance.
            if !hamming_check(&p).satisfied {
                for d in p.d()..=p.n() {
                    let worse = CodeParams::new(p.n(), p.k(), p.r(), d).unwrap();
                    prop_assert!(!hamming_check(&worse).satisfied);
                }
            }
        }

        #[test]
        fn verdicts_match_exact_side_comparison(p in valid_params(80)) {
            for report in [hamming_check(&p), singleton_check(&p)] {
                if report.satisfied && report.note.is_none() {
                    prop_assert!(report.lhs >= report.rhs);
                }
                if !report.satisfied {
                    // Clamping can mask the raw comparison only when noted.
                    prop_assert!(report.lhs < report.rhs || report.note.is_some());
                }
                match report.lhs.cmp(&report.rhs) {
                    std::cmp::Ordering::Less => prop_assert!(report.margin_bits > 0.0),
                    std::cmp::Ordering::Equal => prop_assert_eq!(report.margin_bits, 0.0),
                    std::cmp::Ordering::Greater => prop_assert!(report.margin_bits < 0.0),
                }
            }
        }
    }
}
