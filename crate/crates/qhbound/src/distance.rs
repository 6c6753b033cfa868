//! Brute-force minimum distance and purity for small constructed codes.
//!
//! Candidates are enumerated in one canonical order: ascending weight,
//! supports in lexicographic order, and letters per support position in the
//! order X < Z < Y (first support qubit most significant). Weights are
//! scanned sequentially; within a weight the supports fan out across
//! threads, and the first match *in canonical order* wins, so the reported
//! operator and count never depend on the worker count.
//!
//! Every search refuses to start when the exact candidate count exceeds the
//! caller's budget, reporting that count so the caller can decide whether
//! to raise it.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use thiserror::Error;

use crate::comb::{sphere_volume, CombError};
use crate::lattice::SubsystemCode;
use crate::symplectic::{symplectic_product, Echelon, GeneratorSet, Pauli, PauliVector};

/// Default candidate budget: about a minute of desk time.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("max weight must satisfy 1 <= w <= n (w = {w}, n = {n})")]
    WeightRange { w: usize, n: usize },
    #[error("estimated workload of {estimate} candidates exceeds the budget of {budget}")]
    BudgetExceeded { estimate: BigUint, budget: u64 },
}

/// What a weight-limited search found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistanceOutcome {
    /// Minimum weight of an operator commuting with every stabilizer but
    /// lying outside the gauge span, plus the canonically first witness.
    Found { d: usize, witness: PauliVector },
    /// No such operator exists up to the requested weight.
    Truncated { max_weight: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult {
    pub outcome: DistanceOutcome,
    /// Candidates up to and including the witness in canonical order (the
    /// full workload when truncated). Independent of thread scheduling.
    pub enumerated: u64,
}

impl DistanceResult {
    pub fn found(&self) -> Option<(usize, &PauliVector)> {
        match &self.outcome {
            DistanceOutcome::Found { d, witness } => Some((*d, witness)),
            DistanceOutcome::Truncated { .. } => None,
        }
    }
}

/// Purity verdict for a code of distance `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Purity {
    /// No non-identity gauge element is lighter than the distance.
    Pure,
    /// A gauge element of weight below `d`; the canonically first one.
    Impure { witness: PauliVector },
}

/// Exact number of candidates a search up to `max_weight` must consider:
/// `sphere_volume(n, max_weight) - 1` (the identity is never a candidate).
pub fn workload_estimate(n: u64, max_weight: u64) -> Result<BigUint, CombError> {
    Ok(sphere_volume(n, max_weight)? - 1u32)
}

/// Letters in canonical per-qubit order.
const LETTERS: [Pauli; 3] = [Pauli::X, Pauli::Z, Pauli::Y];

/// `C(n, k)` clamped to `u64::MAX`. Counts that are actually iterated are
/// below the search budget and therefore exact; saturated values occur only
/// in comparisons during unranking, where "huge" is all that matters.
fn binom_saturating(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u64::MAX,
        };
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// The w-subset of `0..n` with the given lexicographic rank.
fn unrank_combination(n: usize, w: usize, mut rank: u64) -> Vec<usize> {
    let mut combo = Vec::with_capacity(w);
    let mut next = 0usize;
    for remaining in (1..=w).rev() {
        loop {
            let starting_here = binom_saturating(n - next - 1, remaining - 1);
            if rank < starting_here {
                combo.push(next);
                next += 1;
                break;
            }
            rank -= starting_here;
            next += 1;
        }
    }
    combo
}

/// Write the letter assignment with the given rank onto `support`.
/// Digits are base 3, first support position most significant, digit
/// values in `LETTERS` order.
fn assign_letters(v: &mut PauliVector, support: &[usize], mut code: u64) {
    for &q in support.iter().rev() {
        v.set(q, Some(LETTERS[(code % 3) as usize]));
        code /= 3;
    }
}

/// First candidate in canonical order with weight in `1..=max_weight`
/// accepted by `accept`; returns `(weight, support rank, letter rank,
/// witness)`.
fn search_by_weight<F>(
    n: usize,
    max_weight: usize,
    accept: F,
) -> Option<(usize, u64, u64, PauliVector)>
where
    F: Fn(&PauliVector) -> bool + Sync,
{
    for w in 1..=max_weight {
        let supports = binom_saturating(n, w);
        let letters = 3u64
            .checked_pow(w as u32)
            .expect("letter count is below the budget");
        let hit = (0..supports)
            .into_par_iter()
            .find_map_first(|support_rank| {
                let support = unrank_combination(n, w, support_rank);
                let mut candidate = PauliVector::identity(n);
                (0..letters).find_map(|letter_rank| {
                    assign_letters(&mut candidate, &support, letter_rank);
                    accept(&candidate).then(|| (support_rank, letter_rank, candidate.clone()))
                })
            });
        if let Some((support_rank, letter_rank, witness)) = hit {
            return Some((w, support_rank, letter_rank, witness));
        }
    }
    None
}

fn ensure_budget(n: usize, max_weight: usize, budget: u64) -> Result<(), DistanceError> {
    let estimate =
        workload_estimate(n as u64, max_weight as u64).expect("max_weight validated against n");
    if estimate > BigUint::from(budget) {
        return Err(DistanceError::BudgetExceeded { estimate, budget });
    }
    Ok(())
}

/// Canonical 1-based index of a witness among all candidates ordered by
/// (weight, support rank, letter rank).
fn canonical_index(n: usize, w: usize, support_rank: u64, letter_rank: u64) -> u64 {
    let below = workload_estimate(n as u64, w as u64 - 1)
        .expect("w - 1 < n")
        .to_u64()
        .expect("within budget");
    let letters = 3u64.pow(w as u32);
    below + support_rank * letters + letter_rank + 1
}

/// Brute-force the minimum weight of an operator that commutes with every
/// stabilizer generator but lies outside the gauge span, scanning weights
/// `1..=max_weight` under `budget`.
pub fn min_distance(
    code: &SubsystemCode,
    max_weight: usize,
    budget: u64,
) -> Result<DistanceResult, DistanceError> {
    let n = code.n();
    if max_weight == 0 || max_weight > n {
        return Err(DistanceError::WeightRange { w: max_weight, n });
    }
    ensure_budget(n, max_weight, budget)?;

    let gauge_span = Echelon::from_set(code.gauge());
    let stabilizers: Vec<&PauliVector> = code.stabilizer().iter().collect();
    let accept = |candidate: &PauliVector| {
        stabilizers
            .iter()
            .all(|st| symplectic_product(candidate, st).expect("same qubit count") == 0)
            && !gauge_span.contains(candidate)
    };

    Ok(match search_by_weight(n, max_weight, accept) {
        Some((w, support_rank, letter_rank, witness)) => DistanceResult {
            enumerated: canonical_index(n, w, support_rank, letter_rank),
            outcome: DistanceOutcome::Found { d: w, witness },
        },
        None => DistanceResult {
            enumerated: workload_estimate(n as u64, max_weight as u64)
                .expect("validated")
                .to_u64()
                .expect("within budget"),
            outcome: DistanceOutcome::Truncated { max_weight },
        },
    })
}

/// Is any non-identity gauge element lighter than the distance `d`?
/// Searches weights `1..=d-1` with the same enumeration and budget rules
/// as [`min_distance`].
pub fn purity(code: &SubsystemCode, d: usize, budget: u64) -> Result<Purity, DistanceError> {
    let n = code.n();
    if d == 0 || d > n {
        return Err(DistanceError::WeightRange { w: d, n });
    }
    if d == 1 {
        return Ok(Purity::Pure);
    }
    ensure_budget(n, d - 1, budget)?;

    let gauge_span = Echelon::from_set(code.gauge());
    let hit = search_by_weight(n, d - 1, |candidate| gauge_span.contains(candidate));
    Ok(match hit {
        Some((_, _, _, witness)) => Purity::Impure { witness },
        None => Purity::Pure,
    })
}

/// Minimum weight over the non-identity elements of the span of `set`, by
/// direct enumeration of all `2^rank - 1` combinations; `None` when the
/// rank exceeds `cap` (the enumeration would be too large) or the span is
/// trivial. Returns the canonically first minimum-weight element.
pub fn min_span_weight(set: &GeneratorSet, cap: u32) -> Option<(usize, PauliVector)> {
    let echelon = Echelon::from_set(set);
    let rank = echelon.rank();
    if rank == 0 || rank > cap.min(63) as usize {
        return None;
    }
    let basis: Vec<&PauliVector> = echelon.basis().collect();
    let mut best: Option<(usize, PauliVector)> = None;
    for mask in 1u64..1u64 << rank {
        let mut v = PauliVector::identity(set.n());
        for (i, b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                v ^= *b;
            }
        }
        let w = v.weight();
        if best.as_ref().map_or(true, |(bw, _)| w < *bw) {
            best = Some((w, v));
        }
    }
    best
}
