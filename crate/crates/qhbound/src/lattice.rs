//! Bacon-Shor gauge and stabilizer groups on an `a x b` qubit lattice.
//!
//! Conventions fixed here (the transposed choice would be equally valid;
//! fixing one keeps every downstream result bit-exact):
//!
//! * qubit `(i, j)` of an a-row, b-column lattice has index `i*b + j`;
//! * X-type gauge generators pair horizontal neighbours within a row,
//!   Z-type pair vertical neighbours within a column;
//! * generators are emitted row-major, X-type first, then Z-type;
//! * explicit stabilizer generators are X on all qubits of two adjacent
//!   columns (ascending column), then Z on all qubits of two adjacent rows
//!   (ascending row).

use serde::Serialize;
use thiserror::Error;

use crate::families::rect_family;
use crate::symplectic::{symplectic_product, Echelon, GeneratorSet, Pauli, PauliVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice sides must be at least 1")]
    ZeroSide,
    #[error("{a} x {b} lattice exceeds the supported size")]
    TooLarge { a: usize, b: usize },
}

/// A constructed lattice code: generating sets plus the exact `(k, r, s)`
/// split derived from GF(2) ranks.
///
/// * `s = dim(center(gauge))` — independent stabilizers,
/// * `r = (rank(gauge) - s) / 2` — gauge qubits,
/// * `k = n - s - r` — logical qubits.
#[derive(Debug, Clone)]
pub struct SubsystemCode {
    a: usize,
    b: usize,
    n: usize,
    gauge: GeneratorSet,
    stabilizer: GeneratorSet,
    s: usize,
    r: usize,
    k: usize,
}

impl SubsystemCode {
    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// The gauge generators, in construction order.
    pub fn gauge(&self) -> &GeneratorSet {
        &self.gauge
    }

    /// The explicit stabilizer generators, in construction order.
    pub fn stabilizer(&self) -> &GeneratorSet {
        &self.stabilizer
    }

    /// Re-derive everything claimed about this code and compare against the
    /// family formulas:
    ///
    /// * `(n, k, r)` match the `a x b` family entry;
    /// * `k + r + s = n`;
    /// * every explicit stabilizer lies in the gauge span and commutes with
    ///   every gauge generator;
    /// * the explicit stabilizers span exactly `center(gauge)`.
    pub fn certify(&self) -> bool {
        let family = match rect_family(self.a as u64, self.b as u64) {
            Ok(p) => p,
            Err(_) => return false,
        };
        if (self.n as u64, self.k as u64, self.r as u64) != (family.n(), family.k(), family.r()) {
            return false;
        }
        if self.k + self.r + self.s != self.n {
            return false;
        }

        let gauge_span = Echelon::from_set(&self.gauge);
        for st in self.stabilizer.iter() {
            if !gauge_span.contains(st) {
                return false;
            }
            for g in self.gauge.iter() {
                if symplectic_product(st, g).expect("same qubit count") != 0 {
                    return false;
                }
            }
        }

        let center = self.gauge.center();
        if center.len() != self.s {
            return false;
        }
        let stab_span = Echelon::from_set(&self.stabilizer);
        if stab_span.rank() != self.s {
            return false;
        }
        let center_span = Echelon::from_set(&center);
        self.stabilizer.iter().all(|v| center_span.contains(v))
            && center.iter().all(|v| stab_span.contains(v))
    }
}

/// Build the `a x b` lattice code. `a(b-1)` X-type plus `(a-1)b` Z-type
/// gauge generators, `(b-1) + (a-1)` explicit stabilizers, and the exact
/// `(k, r, s)` split.
pub fn build_bacon_shor(a: usize, b: usize) -> Result<SubsystemCode, LatticeError> {
    if a == 0 || b == 0 {
        return Err(LatticeError::ZeroSide);
    }
    let n = a
        .checked_mul(b)
        .filter(|&n| n <= 1 << 24)
        .ok_or(LatticeError::TooLarge { a, b })?;
    let idx = |i: usize, j: usize| i * b + j;

    let mut gauge = GeneratorSet::new(n);
    for i in 0..a {
        for j in 0..b - 1 {
            let mut g = PauliVector::identity(n);
            g.set(idx(i, j), Some(Pauli::X));
            g.set(idx(i, j + 1), Some(Pauli::X));
            gauge.push(g).expect("same qubit count");
        }
    }
    for i in 0..a - 1 {
        for j in 0..b {
            let mut g = PauliVector::identity(n);
            g.set(idx(i, j), Some(Pauli::Z));
            g.set(idx(i + 1, j), Some(Pauli::Z));
            gauge.push(g).expect("same qubit count");
        }
    }

    let mut stabilizer = GeneratorSet::new(n);
    for j in 0..b - 1 {
        let mut st = PauliVector::identity(n);
        for i in 0..a {
            st.set(idx(i, j), Some(Pauli::X));
            st.set(idx(i, j + 1), Some(Pauli::X));
        }
        stabilizer.push(st).expect("same qubit count");
    }
    for i in 0..a - 1 {
        let mut st = PauliVector::identity(n);
        for j in 0..b {
            st.set(idx(i, j), Some(Pauli::Z));
            st.set(idx(i + 1, j), Some(Pauli::Z));
        }
        stabilizer.push(st).expect("same qubit count");
    }

    let s = gauge.center().len();
    let rank = gauge.rank();
    assert_eq!(
        (rank - s) % 2,
        0,
        "gauge rank minus center dimension must be even"
    );
    let r = (rank - s) / 2;
    let k = n - s - r;

    Ok(SubsystemCode {
        a,
        b,
        n,
        gauge,
        stabilizer,
        s,
        r,
        k,
    })
}

/// Serialization form of a constructed code: dimensions, generator strings
/// in `I/X/Y/Z` text form, and the derived invariants.
#[derive(Debug, Clone, Serialize)]
pub struct CodeRecord {
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub s: usize,
    pub gauge: Vec<String>,
    pub stabilizer: Vec<String>,
}

impl From<&SubsystemCode> for CodeRecord {
    fn from(code: &SubsystemCode) -> Self {
        CodeRecord {
            a: code.a,
            b: code.b,
            n: code.n,
            k: code.k,
            r: code.r,
            s: code.s,
            gauge: code.gauge.iter().map(PauliVector::to_string).collect(),
            stabilizer: code.stabilizer.iter().map(PauliVector::to_string).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_by_three_layout_is_bit_exact() {
        let code = build_bacon_shor(3, 3).unwrap();
        assert_eq!((code.n(), code.k(), code.r(), code.s()), (9, 1, 4, 4));
        assert_eq!(code.gauge().len(), 12);
        assert_eq!(code.gauge().rank(), 12);

        let gauge: Vec<String> = code.gauge().iter().map(|g| g.to_string()).collect();
        assert_eq!(
            gauge,
            [
                "XXIIIIIII",
                "IXXIIIIII",
                "IIIXXIIII",
                "IIIIXXIII",
                "IIIIIIXXI",
                "IIIIIIIXX",
                "ZIIZIIIII",
                "IZIIZIIII",
                "IIZIIZIII",
                "IIIZIIZII",
                "IIIIZIIZI",
                "IIIIIZIIZ",
            ]
        );

        let stabs: Vec<String> = code.stabilizer().iter().map(|g| g.to_string()).collect();
        assert_eq!(
            stabs,
            ["XXIXXIXXI", "IXXIXXIXX", "ZZZZZZIII", "IIIZZZZZZ"]
        );
    }

    #[test]
    fn single_qubit_lattice_is_trivial() {
        let code = build_bacon_shor(1, 1).unwrap();
        assert_eq!((code.n(), code.k(), code.r(), code.s()), (1, 1, 0, 0));
        assert!(code.gauge().is_empty());
        assert!(code.stabilizer().is_empty());
        assert!(code.certify());
    }

    #[test]
    fn two_by_three_counts() {
        let code = build_bacon_shor(2, 3).unwrap();
        assert_eq!(code.gauge().len(), 7);
        assert_eq!((code.n(), code.k(), code.r(), code.s()), (6, 1, 2, 3));
        assert!(code.certify());
    }

    #[test]
    fn rejects_zero_sides() {
        assert_eq!(build_bacon_shor(0, 3).unwrap_err(), LatticeError::ZeroSide);
        assert_eq!(build_bacon_shor(3, 0).unwrap_err(), LatticeError::ZeroSide);
    }

    #[test]
    fn record_carries_generator_strings() {
        let code = build_bacon_shor(2, 2).unwrap();
        let record = CodeRecord::from(&code);
        assert_eq!(record.gauge, ["XXII", "IIXX", "ZIZI", "IZIZ"]);
        assert_eq!(record.stabilizer, ["XXXX", "ZZZZ"]);
        assert_eq!(
            (record.n, record.k, record.r, record.s),
            (4, 1, 1, 2)
        );
    }
}
