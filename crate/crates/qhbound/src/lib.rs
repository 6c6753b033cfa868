//! Exact-arithmetic bound checks and lattice constructions for subsystem
//! quantum codes.
//!
//! The crate answers two related questions in plain big-integer
//! arithmetic, with no floating point anywhere near a verdict:
//!
//! 1. Does a subsystem code with parameters `[[n, k, r, d]]` satisfy the
//!    sphere-packing (Hamming-style) inequality
//!    `2^(n-k-r) >= sum_{j=0}^{t} C(n,j) * 3^j` with `t = (d-1)/2`, and the
//!    linear-programming (Singleton-style) inequality
//!    `k + r <= n - 2(d-1)`? See [`hamming_check`] and [`singleton_check`].
//! 2. For the square-lattice family `[[(2t+1)^2, 1, 4t^2, 2t+1]]`, does the
//!    sphere-packing inequality fail at *every* index `t`, as a short chain
//!    of integer lemmas predicts? See [`verify_chain`].
//!
//! The lattice constructions in [`lattice`] realise those parameters as
//! explicit two-dimensional gauge codes, and [`distance`] confirms small
//! instances by brute force over the full Pauli group.
//!
//! # Quick start
//!
//! ```
//! use qhbound::{hamming_check, odd_family};
//!
//! // The t = 1 member of the square-lattice family: [[9, 1, 4, 3]].
//! let params = odd_family(1).unwrap();
//! let report = hamming_check(&params);
//! assert!(!report.satisfied); // 16 < 28: the inequality fails
//! assert_eq!(report.lhs.to_string(), "16");
//! assert_eq!(report.rhs.to_string(), "28");
//! ```

pub mod bounds;
pub mod comb;
pub mod distance;
pub mod families;
pub mod lattice;
pub mod proof;
pub mod symplectic;

pub use bounds::{
    hamming_check, singleton_check, Bound, BoundReport, CodeParams, ParamsError,
};
pub use comb::{binomial, log2_margin, power, sphere_volume, CombError};
pub use distance::{
    min_distance, min_span_weight, purity, workload_estimate, DistanceError, DistanceOutcome,
    DistanceResult, Purity, DEFAULT_BUDGET,
};
pub use families::{odd_family, rect_family, square_family, FamilyError};
pub use lattice::{build_bacon_shor, CodeRecord, LatticeError, SubsystemCode};
pub use proof::{
    check_suffices, lemma_binomial, lemma_power, lemma_quadratic, verify_chain, ChainReport,
};
pub use symplectic::{
    symplectic_product, GeneratorSet, Pauli, PauliVector, SymplecticError,
};
