//! Projective n-qubit Pauli operators as GF(2) symplectic `(x|z)` vectors.
//!
//! Phases are never tracked: operators differing by a factor of ±1 or ±i
//! are the same vector, which is all the rank and commutation machinery
//! needs. Bits are packed into 64-bit words with qubit index ascending from
//! bit 0; elimination always pivots on the lowest set bit of the
//! concatenated `(x|z)` vector, so ranks, spans and centers come out the
//! same on every run.

use std::fmt;
use std::ops::BitXorAssign;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error("qubit count mismatch: {left} vs {right}")]
    QubitCountMismatch { left: usize, right: usize },
    #[error("invalid Pauli character {found:?} (expected I, X, Y or Z)")]
    InvalidPauliChar { found: char },
    #[error("operator string must not be empty")]
    EmptyOperator,
}

/// One non-identity single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    fn xz(self) -> (bool, bool) {
        match self {
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }
}

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

fn get_bit(words: &[u64], idx: usize) -> bool {
    words[idx / WORD_BITS] >> (idx % WORD_BITS) & 1 == 1
}

fn put_bit(words: &mut [u64], idx: usize, value: bool) {
    let mask = 1u64 << (idx % WORD_BITS);
    if value {
        words[idx / WORD_BITS] |= mask;
    } else {
        words[idx / WORD_BITS] &= !mask;
    }
}

fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .position(|&w| w != 0)
        .map(|i| i * WORD_BITS + words[i].trailing_zeros() as usize)
}

/// A projective Pauli operator on `n >= 1` qubits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliVector {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
}

impl PauliVector {
    /// The identity on `n` qubits.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "operators act on at least one qubit");
        Self {
            n,
            x: vec![0; words_for(n)],
            z: vec![0; words_for(n)],
        }
    }

    /// A single letter at `qubit`, identity elsewhere.
    pub fn single(n: usize, qubit: usize, p: Pauli) -> Self {
        let mut v = Self::identity(n);
        v.set(qubit, Some(p));
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Letter at `qubit`; `None` is the identity.
    pub fn pauli_at(&self, qubit: usize) -> Option<Pauli> {
        assert!(qubit < self.n, "qubit index out of range");
        match (get_bit(&self.x, qubit), get_bit(&self.z, qubit)) {
            (false, false) => None,
            (true, false) => Some(Pauli::X),
            (true, true) => Some(Pauli::Y),
            (false, true) => Some(Pauli::Z),
        }
    }

    /// Overwrite the letter at `qubit` (`None` clears it to identity).
    pub fn set(&mut self, qubit: usize, p: Option<Pauli>) {
        assert!(qubit < self.n, "qubit index out of range");
        let (xb, zb) = p.map_or((false, false), Pauli::xz);
        put_bit(&mut self.x, qubit, xb);
        put_bit(&mut self.z, qubit, zb);
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(x, z)| (x | z).count_ones() as usize)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().all(|&w| w == 0) && self.z.iter().all(|&w| w == 0)
    }

    /// Bit of the concatenated `(x|z)` vector: x occupies `0..n`, z
    /// occupies `n..2n`.
    fn combined_bit(&self, idx: usize) -> bool {
        if idx < self.n {
            get_bit(&self.x, idx)
        } else {
            get_bit(&self.z, idx - self.n)
        }
    }

    /// Lowest set bit of the concatenated `(x|z)` vector — the pivot
    /// position used by elimination.
    fn leading_bit(&self) -> Option<usize> {
        first_bit(&self.x).or_else(|| first_bit(&self.z).map(|i| i + self.n))
    }
}

impl BitXorAssign<&PauliVector> for PauliVector {
    /// GF(2) product of projective operators (phases discarded).
    ///
    /// Panics on mismatched qubit counts; use [`symplectic_product`] for a
    /// checked pairing of operators from unknown sources.
    fn bitxor_assign(&mut self, rhs: &PauliVector) {
        assert_eq!(self.n, rhs.n, "qubit count mismatch");
        for (a, b) in self.x.iter_mut().zip(&rhs.x) {
            *a ^= b;
        }
        for (a, b) in self.z.iter_mut().zip(&rhs.z) {
            *a ^= b;
        }
    }
}

impl fmt::Display for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.n {
            f.write_str(match self.pauli_at(q) {
                None => "I",
                Some(Pauli::X) => "X",
                Some(Pauli::Y) => "Y",
                Some(Pauli::Z) => "Z",
            })?;
        }
        Ok(())
    }
}

impl FromStr for PauliVector {
    type Err = SymplecticError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(SymplecticError::EmptyOperator);
        }
        let mut v = PauliVector::identity(s.chars().count());
        for (q, c) in s.chars().enumerate() {
            let p = match c {
                'I' => None,
                'X' => Some(Pauli::X),
                'Y' => Some(Pauli::Y),
                'Z' => Some(Pauli::Z),
                found => return Err(SymplecticError::InvalidPauliChar { found }),
            };
            v.set(q, p);
        }
        Ok(v)
    }
}

fn sp_unchecked(u: &PauliVector, v: &PauliVector) -> u8 {
    let mut acc = 0u32;
    for (a, b) in u.x.iter().zip(&v.z) {
        acc ^= (a & b).count_ones();
    }
    for (a, b) in u.z.iter().zip(&v.x) {
        acc ^= (a & b).count_ones();
    }
    (acc & 1) as u8
}

/// Symplectic inner product `<u.x, v.z> + <u.z, v.x> mod 2`.
///
/// Zero exactly when the operators commute (up to phase).
pub fn symplectic_product(u: &PauliVector, v: &PauliVector) -> Result<u8, SymplecticError> {
    if u.n != v.n {
        return Err(SymplecticError::QubitCountMismatch {
            left: u.n,
            right: v.n,
        });
    }
    Ok(sp_unchecked(u, v))
}

/// An ordered list of Pauli operators on a common qubit count. Order is
/// preserved: it is part of the deterministic output contract of everything
/// built on top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    n: usize,
    gens: Vec<PauliVector>,
}

impl GeneratorSet {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "operators act on at least one qubit");
        Self {
            n,
            gens: Vec::new(),
        }
    }

    pub fn from_vec(n: usize, gens: Vec<PauliVector>) -> Result<Self, SymplecticError> {
        let mut set = Self::new(n);
        for g in gens {
            set.push(g)?;
        }
        Ok(set)
    }

    pub fn push(&mut self, g: PauliVector) -> Result<(), SymplecticError> {
        if g.n != self.n {
            return Err(SymplecticError::QubitCountMismatch {
                left: self.n,
                right: g.n,
            });
        }
        self.gens.push(g);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&PauliVector> {
        self.gens.get(i)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PauliVector> {
        self.gens.iter()
    }

    /// GF(2) rank of the generators as `2n`-bit vectors.
    pub fn rank(&self) -> usize {
        Echelon::from_set(self).rank()
    }

    /// Is `u` a product of generators (up to phase)?
    pub fn contains(&self, u: &PauliVector) -> Result<bool, SymplecticError> {
        if u.n != self.n {
            return Err(SymplecticError::QubitCountMismatch {
                left: self.n,
                right: u.n,
            });
        }
        Ok(Echelon::from_set(self).contains(u))
    }

    /// Basis of the center of the generated group: the elements of the span
    /// that commute with every generator.
    ///
    /// Computed as the null space of the symplectic Gram matrix of a span
    /// basis; both eliminations pivot on lowest set bits, so the output
    /// basis is a deterministic function of the generator list.
    pub fn center(&self) -> GeneratorSet {
        let echelon = Echelon::from_set(self);
        let basis: Vec<&PauliVector> = echelon.basis().collect();
        let rho = basis.len();
        let mut center = GeneratorSet::new(self.n);
        if rho == 0 {
            return center;
        }

        // Gram rows G[i][j] = <basis[i], basis[j]>, packed; each row is
        // paired with a coefficient row tracking which basis elements were
        // combined into it.
        let width = words_for(rho);
        let mut pending: Vec<(Vec<u64>, Vec<u64>)> = Vec::with_capacity(rho);
        for (i, bi) in basis.iter().enumerate() {
            let mut gram = vec![0u64; width];
            for (j, bj) in basis.iter().enumerate() {
                if sp_unchecked(bi, bj) == 1 {
                    put_bit(&mut gram, j, true);
                }
            }
            let mut coeff = vec![0u64; width];
            put_bit(&mut coeff, i, true);
            pending.push((gram, coeff));
        }

        // Eliminate the Gram side; a row whose Gram part vanishes names a
        // central combination of basis elements.
        let mut rows: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new(); // sorted by pivot
        for (mut gram, mut coeff) in pending {
            for (pivot, pg, pc) in &rows {
                if get_bit(&gram, *pivot) {
                    for (a, b) in gram.iter_mut().zip(pg) {
                        *a ^= b;
                    }
                    for (a, b) in coeff.iter_mut().zip(pc) {
                        *a ^= b;
                    }
                }
            }
            match first_bit(&gram) {
                Some(pivot) => {
                    let at = rows.partition_point(|(p, _, _)| *p < pivot);
                    rows.insert(at, (pivot, gram, coeff));
                }
                None => {
                    let mut v = PauliVector::identity(self.n);
                    for (i, b) in basis.iter().enumerate() {
                        if get_bit(&coeff, i) {
                            v ^= b;
                        }
                    }
                    center.push(v).expect("same qubit count");
                }
            }
        }
        center
    }
}

/// Row-echelon basis over GF(2) with deterministic lowest-index pivoting.
///
/// Rows are kept sorted by pivot; a stored row's lowest set bit is its
/// pivot, so a single ascending reduction pass is complete.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    rows: Vec<(usize, PauliVector)>,
}

impl Echelon {
    pub(crate) fn from_set(set: &GeneratorSet) -> Self {
        let mut e = Self { rows: Vec::new() };
        for g in set.iter() {
            e.insert(g.clone());
        }
        e
    }

    fn reduce(&self, v: &mut PauliVector) {
        for (pivot, row) in &self.rows {
            if v.combined_bit(*pivot) {
                *v ^= row;
            }
        }
    }

    /// Insert the reduction of `v`; returns whether the span grew.
    pub(crate) fn insert(&mut self, mut v: PauliVector) -> bool {
        self.reduce(&mut v);
        match v.leading_bit() {
            None => false,
            Some(pivot) => {
                let at = self.rows.partition_point(|(p, _)| *p < pivot);
                self.rows.insert(at, (pivot, v));
                true
            }
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn contains(&self, v: &PauliVector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_identity()
    }

    /// Basis rows in ascending pivot order.
    pub(crate) fn basis(&self) -> impl Iterator<Item = &PauliVector> {
        self.rows.iter().map(|(_, row)| row)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pv(s: &str) -> PauliVector {
        s.parse().unwrap()
    }

    fn set(gens: &[&str]) -> GeneratorSet {
        let vecs: Vec<PauliVector> = gens.iter().map(|s| pv(s)).collect();
        GeneratorSet::from_vec(vecs[0].n(), vecs).unwrap()
    }

    /// The 12 gauge generators of the 3x3 lattice code, in construction
    /// order (X pairs row-major, then Z pairs row-major).
    fn gauge_3x3() -> GeneratorSet {
        set(&[
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
        ])
    }

    #[test]
    fn rendering_round_trips() {
        for s in ["I", "X", "ZZII", "XIYZ", "IIIIIIIIZ"] {
            assert_eq!(pv(s).to_string(), s);
        }
        assert_eq!(
            "XQ".parse::<PauliVector>(),
            Err(SymplecticError::InvalidPauliChar { found: 'Q' })
        );
        assert_eq!(
            "".parse::<PauliVector>(),
            Err(SymplecticError::EmptyOperator)
        );
    }

    #[test]
    fn weights() {
        assert_eq!(pv("IIII").weight(), 0);
        assert_eq!(pv("IYII").weight(), 1);
        assert_eq!(pv("XXII").weight(), 2);
        assert_eq!(pv("XYZI").weight(), 3);
        assert!(pv("IIII").is_identity());
        assert!(!pv("IIIZ").is_identity());
    }

    #[test]
    fn weight_spans_word_boundaries() {
        let mut v = PauliVector::identity(130);
        v.set(0, Some(Pauli::X));
        v.set(63, Some(Pauli::Y));
        v.set(64, Some(Pauli::Z));
        v.set(129, Some(Pauli::X));
        assert_eq!(v.weight(), 4);
        assert_eq!(v.leading_bit(), Some(0));
    }

    #[test]
    fn product_of_single_qubit_pairs() {
        // Anticommuting: X vs Z and X vs Y on the same qubit.
        assert_eq!(symplectic_product(&pv("XI"), &pv("ZI")).unwrap(), 1);
        assert_eq!(symplectic_product(&pv("XI"), &pv("YI")).unwrap(), 1);
        // Commuting: same letter, disjoint support, or paired overlap.
        assert_eq!(symplectic_product(&pv("XI"), &pv("XI")).unwrap(), 0);
        assert_eq!(symplectic_product(&pv("XI"), &pv("IZ")).unwrap(), 0);
        assert_eq!(symplectic_product(&pv("XX"), &pv("ZZ")).unwrap(), 0);
    }

    #[test]
    fn product_rejects_mismatched_lengths() {
        assert_eq!(
            symplectic_product(&pv("X"), &pv("XX")),
            Err(SymplecticError::QubitCountMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn rank_of_simple_sets() {
        assert_eq!(GeneratorSet::new(4).rank(), 0);
        assert_eq!(set(&["XXII", "XXII"]).rank(), 1); // duplicates collapse
        assert_eq!(set(&["XXII", "IXXI", "XIXI"]).rank(), 2); // third = sum
        assert_eq!(gauge_3x3().rank(), 12);
    }

    #[test]
    fn span_membership() {
        let gs = gauge_3x3();
        // Every generator and the identity are in the span.
        assert!(gs.contains(&PauliVector::identity(9)).unwrap());
        for g in gs.iter() {
            assert!(gs.contains(g).unwrap());
        }
        // A lone X is not: gauge X support is even in every row.
        assert!(!gs.contains(&pv("XIIIIIIII")).unwrap());
        // Products of generators are.
        let mut prod = pv("XXIIIIIII");
        prod ^= &pv("IXXIIIIII");
        assert!(gs.contains(&prod).unwrap());
        // Mismatched length is rejected, not coerced.
        assert!(gs.contains(&pv("XX")).is_err());
    }

    #[test]
    fn center_of_conjugate_pair_is_trivial() {
        let gs = set(&["XI", "ZI"]);
        assert_eq!(gs.center().len(), 0);
    }

    #[test]
    fn center_of_commuting_singleton_is_itself() {
        let gs = set(&["XI"]);
        let center = gs.center();
        assert_eq!(center.len(), 1);
        assert_eq!(center.get(0).unwrap(), &pv("XI"));
    }

    #[test]
    fn center_of_lattice_gauge_set() {
        let center = gauge_3x3().center();
        assert_eq!(center.len(), 4);
        let gs = gauge_3x3();
        for c in center.iter() {
            assert!(gs.contains(c).unwrap(), "center element outside span");
            for g in gs.iter() {
                assert_eq!(symplectic_product(c, g).unwrap(), 0);
            }
        }
    }

    // ---- independent elimination oracle (unpacked bool matrices) ----

    fn to_bools(v: &PauliVector) -> Vec<bool> {
        (0..2 * v.n()).map(|i| v.combined_bit(i)).collect()
    }

    fn naive_rank(rows: &[Vec<bool>]) -> usize {
        let mut rows: Vec<Vec<bool>> = rows.to_vec();
        let width = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..width {
            if let Some(found) = (rank..rows.len()).find(|&r| rows[r][col]) {
                rows.swap(rank, found);
                let pivot_row = rows[rank].clone();
                for (r, row) in rows.iter_mut().enumerate() {
                    if r != rank && row[col] {
                        for (a, b) in row.iter_mut().zip(&pivot_row) {
                            *a ^= b;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    fn naive_in_span(target: &Vec<bool>, rows: &[Vec<bool>]) -> bool {
        let base = naive_rank(rows);
        let mut extended = rows.to_vec();
        extended.push(target.clone());
        naive_rank(&extended) == base
    }

    fn arb_pauli(n: usize) -> impl Strategy<Value = PauliVector> {
        proptest::collection::vec(0u8..4, n).prop_map(move |codes| {
            let mut v = PauliVector::identity(n);
            for (q, c) in codes.into_iter().enumerate() {
                let p = match c {
                    0 => None,
                    1 => Some(Pauli::X),
                    2 => Some(Pauli::Y),
                    _ => Some(Pauli::Z),
                };
                v.set(q, p);
            }
            v
        })
    }

    fn arb_set() -> impl Strategy<Value = GeneratorSet> {
        (1usize..=5).prop_flat_map(|n| {
            proptest::collection::vec(arb_pauli(n), 0..=7)
                .prop_map(move |gens| GeneratorSet::from_vec(n, gens).unwrap())
        })
    }

    proptest! {
        #[test]
        fn product_is_symmetric(n in 1usize..=6, seed in 0u64..) {
            let u = sample_pauli(n, seed);
            let v = sample_pauli(n, seed.wrapping_mul(0x9e37_79b9).wrapping_add(1));
            prop_assert_eq!(
                symplectic_product(&u, &v).unwrap(),
                symplectic_product(&v, &u).unwrap()
            );
        }

        #[test]
        fn product_is_bilinear(gs in arb_set(), seed in 0u64..) {
            if gs.len() >= 2 {
                let u = gs.get(0).unwrap();
                let v = gs.get(1).unwrap();
                let w = sample_pauli(gs.n(), seed);
                let mut uv = u.clone();
                uv ^= v;
                prop_assert_eq!(
                    symplectic_product(&uv, &w).unwrap(),
                    symplectic_product(u, &w).unwrap() ^ symplectic_product(v, &w).unwrap()
                );
            }
        }

        #[test]
        fn rank_matches_naive_elimination(gs in arb_set()) {
            let rows: Vec<Vec<bool>> = gs.iter().map(to_bools).collect();
            prop_assert_eq!(gs.rank(), naive_rank(&rows));
        }

        #[test]
        fn membership_matches_naive_elimination(gs in arb_set(), seed in 0u64..) {
            let probe = sample_pauli(gs.n(), seed);
            let rows: Vec<Vec<bool>> = gs.iter().map(to_bools).collect();
            prop_assert_eq!(
                gs.contains(&probe).unwrap(),
                naive_in_span(&to_bools(&probe), &rows)
            );
        }

        #[test]
        fn membership_is_order_independent(gs in arb_set(), seed in 0u64..) {
            let probe = sample_pauli(gs.n(), seed);
            let reversed =
                GeneratorSet::from_vec(gs.n(), gs.iter().rev().cloned().collect()).unwrap();
            prop_assert_eq!(
                gs.contains(&probe).unwrap(),
                reversed.contains(&probe).unwrap()
            );
        }

        #[test]
        fn center_commutes_with_every_generator(gs in arb_set()) {
            let center = gs.center();
            for c in center.iter() {
                prop_assert!(gs.contains(c).unwrap());
                prop_assert!(!c.is_identity());
                for g in gs.iter() {
                    prop_assert_eq!(symplectic_product(c, g).unwrap(), 0);
                }
            }
        }

        #[test]
        fn rank_minus_center_dimension_is_even(gs in arb_set()) {
            let rank = gs.rank();
            let s = gs.center().len();
            prop_assert!(s <= rank);
            prop_assert_eq!((rank - s) % 2, 0);
        }
    }

    /// Deterministic pseudo-random Pauli from a seed; keeps the proptest
    /// strategies above simple where a second independent operator is
    /// needed alongside a generated set.
    fn sample_pauli(n: usize, seed: u64) -> PauliVector {
        let mut state = seed.wrapping_add(0x6a09_e667_f3bc_c909);
        let mut v = PauliVector::identity(n);
        for q in 0..n {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let p = match state % 4 {
                0 => None,
                1 => Some(Pauli::X),
                2 => Some(Pauli::Y),
                _ => Some(Pauli::Z),
            };
            v.set(q, p);
        }
        v
    }
}
