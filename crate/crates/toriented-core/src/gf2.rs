//! Exact linear algebra over GF(2) with certificate extraction.
//!
//! Vectors are elements of {±1}^n written additively: addition is
//! coordinatewise XOR and the zero vector is the identity. The two
//! certificate types ([`OddBasis`], [`OddDependenceWitness`]) are exact
//! complements: for every matrix exactly one of them exists, and each one
//! can be re-verified independently of how it was produced.

use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A bit vector of fixed dimension, packed into machine words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    dim: usize,
    limbs: Vec<u64>,
}

fn limb_count(dim: usize) -> usize {
    dim.div_ceil(64)
}

impl Gf2Vector {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            limbs: vec![0; limb_count(dim)],
        }
    }

    /// The standard unit vector with a single 1 at `index`.
    pub fn unit(dim: usize, index: usize) -> Self {
        assert!(index < dim);
        let mut v = Self::zeros(dim);
        v.set(index, true);
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.iter().enumerate() {
            v.set(i, *b);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.dim);
        (self.limbs[index >> 6] >> (index & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.dim);
        let mask = 1u64 << (index & 63);
        if value {
            self.limbs[index >> 6] |= mask;
        } else {
            self.limbs[index >> 6] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    /// Index of the first (lowest-coordinate) set bit.
    pub fn first_set_bit(&self) -> Option<usize> {
        for (i, &l) in self.limbs.iter().enumerate() {
            if l != 0 {
                return Some(i * 64 + l.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.dim, other.dim, "xor of mismatched dimensions");
        for (a, b) in self.limbs.iter_mut().zip(other.limbs.iter()) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.xor_assign(other);
        r
    }

    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.dim).map(move |i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.iter_bits().map(u8::from).collect()
    }

    /// Copy of `self` with one extra coordinate appended.
    pub fn with_appended_bit(&self, bit: bool) -> Self {
        let mut v = Self::zeros(self.dim + 1);
        for i in 0..self.dim {
            v.set(i, self.get(i));
        }
        v.set(self.dim, bit);
        v
    }

    /// Low bits of the vector as a machine word; requires dim <= 64.
    pub fn as_mask(&self) -> u64 {
        assert!(self.dim <= 64, "vector too wide for a machine word");
        self.limbs.first().copied().unwrap_or(0)
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter_bits() {
            write!(f, "{}", u8::from(b))?;
        }
        Ok(())
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.iter_bits().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", u8::from(b))?;
        }
        write!(f, ")")
    }
}

impl Serialize for Gf2Vector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dim))?;
        for b in self.iter_bits() {
            seq.serialize_element(&u8::from(b))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Gf2Vector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct BitsVisitor;
        impl<'de> Visitor<'de> for BitsVisitor {
            type Value = Gf2Vector;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a sequence of 0/1 coordinates")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut bits = Vec::new();
                while let Some(value) = seq.next_element::<u8>()? {
                    match value {
                        0 => bits.push(false),
                        1 => bits.push(true),
                        other => {
                            return Err(serde::de::Error::custom(format!(
                                "coordinate must be 0 or 1, got {other}"
                            )))
                        }
                    }
                }
                Ok(Gf2Vector::from_bits(bits))
            }
        }
        deserializer.deserialize_seq(BitsVisitor)
    }
}

/// A matrix as an ordered list of rows of equal dimension.
///
/// Row order is preserved: certificate indices always refer back to the
/// rows as given.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct Gf2Matrix {
    dim: usize,
    rows: Vec<Gf2Vector>,
}

#[derive(Deserialize)]
struct RawMatrix {
    dim: usize,
    rows: Vec<Gf2Vector>,
}

impl TryFrom<RawMatrix> for Gf2Matrix {
    type Error = Gf2Error;
    fn try_from(raw: RawMatrix) -> Result<Self, Gf2Error> {
        Gf2Matrix::new(raw.dim, raw.rows)
    }
}

impl Gf2Matrix {
    /// An empty matrix (zero rows) in the given ambient dimension.
    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn new(dim: usize, rows: Vec<Gf2Vector>) -> Result<Self, Gf2Error> {
        for row in &rows {
            if row.dim() != dim {
                return Err(Gf2Error::DimensionMismatch {
                    expected: dim,
                    got: row.dim(),
                });
            }
        }
        Ok(Self { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, index: usize) -> &Gf2Vector {
        &self.rows[index]
    }

    pub fn rows(&self) -> &[Gf2Vector] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.reduce_full().pivots.len()
    }

    /// Reduced row echelon form with full combination tracking.
    ///
    /// Pivots are chosen at the lowest-index nonzero coordinate of each row
    /// as rows are scanned in order, so the result (and every certificate
    /// derived from it) is deterministic.
    pub fn row_reduce(&self) -> RowEchelon {
        let red = self.reduce_full();
        let pivot_rows = Gf2Matrix {
            dim: self.dim,
            rows: red.pivots.iter().map(|p| p.row.clone()).collect(),
        };
        RowEchelon {
            rank: red.pivots.len(),
            pivot_cols: red.pivots.iter().map(|p| p.col).collect(),
            combinations: red.pivots.iter().map(|p| indices_of(&p.combo)).collect(),
            pivot_rows,
            independent_rows: red.independent_rows,
        }
    }

    /// Expresses `target` as a XOR of rows, if it lies in the row span.
    pub fn in_span(&self, target: &Gf2Vector) -> Result<Option<Vec<usize>>, Gf2Error> {
        if target.dim() != self.dim {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.dim,
                got: target.dim(),
            });
        }
        Ok(self.reduce_full().express(target))
    }

    /// Searches for an odd-cardinality subset of rows that XORs to zero.
    ///
    /// Each row v is augmented to (v, 1); an odd dependence exists exactly
    /// when (0, ..., 0, 1) lies in the span of the augmented rows, and the
    /// combination returned by that span query is the witness.
    pub fn odd_dependence(&self) -> Option<OddDependenceWitness> {
        let augmented = Gf2Matrix {
            dim: self.dim + 1,
            rows: self
                .rows
                .iter()
                .map(|r| r.with_appended_bit(true))
                .collect(),
        };
        let target = Gf2Vector::unit(self.dim + 1, self.dim);
        augmented
            .reduce_full()
            .express(&target)
            .map(|indices| OddDependenceWitness { indices })
    }

    /// Builds a basis of the ambient space expressing every row as a XOR of
    /// an odd number of basis vectors; present exactly when
    /// [`odd_dependence`](Self::odd_dependence) is absent.
    ///
    /// The basis keeps a maximal independent subset of the rows and extends
    /// it with standard unit vectors on the non-pivot coordinates.
    pub fn find_odd_basis(&self) -> Option<OddBasis> {
        if self.odd_dependence().is_some() {
            return None;
        }
        let red = self.reduce_full();
        let independent: Vec<Gf2Vector> = red
            .independent_rows
            .iter()
            .map(|&i| self.rows[i].clone())
            .collect();
        let pivot_cols: Vec<usize> = red.pivots.iter().map(|p| p.col).collect();
        let mut basis = independent.clone();
        for col in 0..self.dim {
            if !pivot_cols.contains(&col) {
                basis.push(Gf2Vector::unit(self.dim, col));
            }
        }
        // Every row lies in the span of the independent subset, which sits at
        // the front of the basis; its unique expansion there must be odd,
        // otherwise an odd dependence would have been found above.
        let prefix = Gf2Matrix {
            dim: self.dim,
            rows: independent,
        };
        let prefix_red = prefix.reduce_full();
        let expansions: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| {
                let expansion = prefix_red
                    .express(row)
                    .expect("row must lie in the span of the kept independent rows");
                debug_assert!(expansion.len() % 2 == 1);
                expansion
            })
            .collect();
        Some(OddBasis { basis, expansions })
    }

    fn reduce_full(&self) -> Reduction {
        let row_count = self.rows.len();
        let mut pivots: Vec<Pivot> = Vec::new();
        let mut independent_rows = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut r = row.clone();
            let mut combo = Gf2Vector::unit(row_count, i);
            for p in &pivots {
                if r.get(p.col) {
                    r.xor_assign(&p.row);
                    combo.xor_assign(&p.combo);
                }
            }
            if let Some(col) = r.first_set_bit() {
                pivots.push(Pivot { col, row: r, combo });
                independent_rows.push(i);
            }
        }
        pivots.sort_by_key(|p| p.col);
        // Back-eliminate so each pivot column carries a single 1.
        for k in 0..pivots.len() {
            let (row_k, combo_k, col_k) = (
                pivots[k].row.clone(),
                pivots[k].combo.clone(),
                pivots[k].col,
            );
            for (j, p) in pivots.iter_mut().enumerate() {
                if j != k && p.row.get(col_k) {
                    p.row.xor_assign(&row_k);
                    p.combo.xor_assign(&combo_k);
                }
            }
        }
        Reduction {
            pivots,
            independent_rows,
        }
    }
}

struct Pivot {
    col: usize,
    row: Gf2Vector,
    /// XOR combination over the original rows that produces `row`.
    combo: Gf2Vector,
}

struct Reduction {
    pivots: Vec<Pivot>,
    /// Original indices of the rows kept as the maximal independent subset.
    independent_rows: Vec<usize>,
}

impl Reduction {
    fn express(&self, target: &Gf2Vector) -> Option<Vec<usize>> {
        let combo_dim = self.pivots.first().map(|p| p.combo.dim()).unwrap_or(0);
        let mut rest = target.clone();
        let mut combo = Gf2Vector::zeros(combo_dim);
        for p in &self.pivots {
            if rest.get(p.col) {
                rest.xor_assign(&p.row);
                combo.xor_assign(&p.combo);
            }
        }
        rest.is_zero().then(|| indices_of(&combo))
    }
}

fn indices_of(combo: &Gf2Vector) -> Vec<usize> {
    (0..combo.dim()).filter(|&i| combo.get(i)).collect()
}

/// Result of row reduction: reduced row echelon form plus, for each pivot
/// row, the set of original rows whose XOR produces it.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    pub rank: usize,
    pub pivot_rows: Gf2Matrix,
    pub pivot_cols: Vec<usize>,
    pub combinations: Vec<Vec<usize>>,
    /// Original indices of a maximal independent subset of the input rows.
    pub independent_rows: Vec<usize>,
}

/// An odd-cardinality set of row indices whose XOR is the zero vector.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OddDependenceWitness {
    pub indices: Vec<usize>,
}

impl OddDependenceWitness {
    /// Re-checks the witness against the matrix it claims to refute.
    pub fn verify(&self, matrix: &Gf2Matrix) -> bool {
        if self.indices.len() % 2 != 1 {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        let mut acc = Gf2Vector::zeros(matrix.dim());
        for &i in &self.indices {
            if i >= matrix.row_count() || !seen.insert(i) {
                return false;
            }
            acc.xor_assign(matrix.row(i));
        }
        acc.is_zero()
    }
}

/// A full basis of the ambient space together with, for each input row, the
/// odd-cardinality set of basis indices whose XOR reproduces that row.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OddBasis {
    pub basis: Vec<Gf2Vector>,
    pub expansions: Vec<Vec<usize>>,
}

impl OddBasis {
    /// Re-checks rank, expansion parity and reconstruction against `matrix`.
    pub fn verify(&self, matrix: &Gf2Matrix) -> bool {
        let dim = matrix.dim();
        if self.basis.len() != dim || self.basis.iter().any(|b| b.dim() != dim) {
            return false;
        }
        let basis_matrix = match Gf2Matrix::new(dim, self.basis.clone()) {
            Ok(m) => m,
            Err(_) => return false,
        };
        if basis_matrix.rank() != dim {
            return false;
        }
        if self.expansions.len() != matrix.row_count() {
            return false;
        }
        for (row, expansion) in matrix.rows().iter().zip(&self.expansions) {
            if expansion.len() % 2 != 1 {
                return false;
            }
            let mut seen = std::collections::HashSet::new();
            let mut acc = Gf2Vector::zeros(dim);
            for &i in expansion {
                if i >= dim || !seen.insert(i) {
                    return false;
                }
                acc.xor_assign(&self.basis[i]);
            }
            if &acc != row {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(bits: &[u8]) -> Gf2Vector {
        Gf2Vector::from_bits(bits.iter().map(|&b| b != 0))
    }

    fn matrix_of(dim: usize, rows: &[&[u8]]) -> Gf2Matrix {
        Gf2Matrix::new(dim, rows.iter().map(|r| vec_of(r)).collect()).unwrap()
    }

    /// Exhaustive search over all 2^rows subsets; the independent oracle the
    /// fast path is checked against.
    fn brute_force_odd_dependence(m: &Gf2Matrix) -> bool {
        let rows = m.row_count();
        assert!(rows <= 20);
        (1u32..1 << rows).any(|mask| {
            if mask.count_ones() % 2 == 0 {
                return false;
            }
            let mut acc = Gf2Vector::zeros(m.dim());
            for (i, row) in m.rows().iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc.xor_assign(row);
                }
            }
            acc.is_zero()
        })
    }

    #[test]
    fn row_reduce_rank_examples() {
        let m = matrix_of(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(m.row_reduce().rank, 2);

        let empty = Gf2Matrix::empty(3);
        assert_eq!(empty.row_reduce().rank, 0);

        let m = matrix_of(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        // Each row is the sum of the other two, so every pair spans the third.
        assert_eq!(m.row_reduce().rank, 2);
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            assert_eq!(m.row(i).xor(m.row(j)), *m.row(k));
        }
    }

    #[test]
    fn row_reduce_combinations_reconstruct_pivots() {
        let m = matrix_of(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1], &[1, 1, 1]]);
        let ech = m.row_reduce();
        for (pivot, combo) in ech.pivot_rows.rows().iter().zip(&ech.combinations) {
            let mut acc = Gf2Vector::zeros(3);
            for &i in combo {
                acc.xor_assign(m.row(i));
            }
            assert_eq!(&acc, pivot);
        }
    }

    #[test]
    fn row_reduce_mismatched_rows_rejected() {
        let err = Gf2Matrix::new(2, vec![vec_of(&[1, 0]), vec_of(&[1, 0, 1])]).unwrap_err();
        assert_eq!(
            err,
            Gf2Error::DimensionMismatch {
                expected: 2,
                got: 3
            }
        );
    }

    #[test]
    fn in_span_examples() {
        let m = matrix_of(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(m.in_span(&vec_of(&[1, 1])).unwrap(), Some(vec![0, 1]));

        let m = matrix_of(2, &[&[1, 1]]);
        assert_eq!(m.in_span(&vec_of(&[1, 0])).unwrap(), None);

        let m = matrix_of(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(m.in_span(&vec_of(&[1, 0, 1])).unwrap(), Some(vec![0, 1]));

        assert!(m.in_span(&vec_of(&[1, 0])).is_err());
    }

    #[test]
    fn odd_dependence_examples() {
        let m = matrix_of(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let witness = m.odd_dependence().unwrap();
        assert_eq!(witness.indices, vec![0, 1, 2]);
        assert!(witness.verify(&m));

        // Single nonzero row: no odd subset can vanish.
        assert!(matrix_of(2, &[&[1, 1]]).odd_dependence().is_none());

        assert!(matrix_of(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
            .odd_dependence()
            .is_none());

        // A zero row is by itself a witness of size 1.
        let m = matrix_of(2, &[&[0, 0]]);
        let witness = m.odd_dependence().unwrap();
        assert_eq!(witness.indices, vec![0]);
        assert!(witness.verify(&m));
    }

    #[test]
    fn find_odd_basis_examples() {
        let m = matrix_of(2, &[&[1, 1]]);
        let basis = m.find_odd_basis().unwrap();
        assert_eq!(basis.basis, vec![vec_of(&[1, 1]), vec_of(&[0, 1])]);
        assert_eq!(basis.expansions, vec![vec![0]]);
        assert!(basis.verify(&m));

        assert!(matrix_of(2, &[&[1, 0], &[0, 1], &[1, 1]])
            .find_odd_basis()
            .is_none());

        let empty = Gf2Matrix::empty(4);
        let basis = empty.find_odd_basis().unwrap();
        assert_eq!(
            basis.basis,
            (0..4).map(|i| Gf2Vector::unit(4, i)).collect::<Vec<_>>()
        );
        assert!(basis.expansions.is_empty());
        assert!(basis.verify(&empty));
    }

    #[test]
    fn duplicate_rows_never_create_a_witness_alone() {
        let m = matrix_of(3, &[&[1, 1, 0], &[1, 1, 0]]);
        assert!(m.odd_dependence().is_none());
        let basis = m.find_odd_basis().unwrap();
        assert_eq!(basis.expansions, vec![vec![0], vec![0]]);
        assert!(basis.verify(&m));
    }

    #[test]
    fn exhaustive_small_matrices_match_brute_force() {
        // Every matrix with up to 3 rows drawn from GF(2)^2, ordered rows.
        for dim in 1..=2usize {
            let vectors: Vec<Gf2Vector> = (0..1u32 << dim)
                .map(|mask| Gf2Vector::from_bits((0..dim).map(|i| mask >> i & 1 == 1)))
                .collect();
            let mut stack: Vec<Vec<Gf2Vector>> = vec![Vec::new()];
            while let Some(rows) = stack.pop() {
                let m = Gf2Matrix::new(dim, rows.clone()).unwrap();
                let witness = m.odd_dependence();
                assert_eq!(witness.is_some(), brute_force_odd_dependence(&m));
                assert_eq!(witness.is_some(), m.find_odd_basis().is_none());
                if let Some(w) = witness {
                    assert!(w.verify(&m));
                } else {
                    assert!(m.find_odd_basis().unwrap().verify(&m));
                }
                if rows.len() < 3 {
                    for v in &vectors {
                        let mut next = rows.clone();
                        next.push(v.clone());
                        stack.push(next);
                    }
                }
            }
        }
    }

    #[test]
    fn vector_serde_round_trip() {
        let v = vec_of(&[1, 0, 1, 1, 0]);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, "[1,0,1,1,0]");
        let back: Gf2Vector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<Gf2Vector>("[0,2]").is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix() -> impl Strategy<Value = Gf2Matrix> {
            (1usize..=6, 0usize..=9).prop_flat_map(|(dim, rows)| {
                proptest::collection::vec(proptest::collection::vec(any::<bool>(), dim), rows)
                    .prop_map(move |rows| {
                        Gf2Matrix::new(dim, rows.into_iter().map(Gf2Vector::from_bits).collect())
                            .unwrap()
                    })
            })
        }

        proptest! {
            #[test]
            fn exactly_one_certificate_exists(m in arb_matrix()) {
                let witness = m.odd_dependence();
                let basis = m.find_odd_basis();
                prop_assert!(witness.is_some() != basis.is_some());
                if let Some(w) = witness {
                    prop_assert!(w.verify(&m));
                }
                if let Some(b) = basis {
                    prop_assert!(b.verify(&m));
                }
            }

            #[test]
            fn row_reduce_is_idempotent(m in arb_matrix()) {
                let once = m.row_reduce();
                let twice = once.pivot_rows.row_reduce();
                prop_assert_eq!(&once.pivot_rows, &twice.pivot_rows);
                prop_assert_eq!(once.rank, twice.rank);
            }

            #[test]
            fn rank_is_permutation_invariant(m in arb_matrix(), seed in any::<u64>()) {
                let mut rows = m.rows().to_vec();
                // Cheap deterministic shuffle.
                let mut state = seed | 1;
                for i in (1..rows.len()).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    rows.swap(i, (state >> 33) as usize % (i + 1));
                }
                let shuffled = Gf2Matrix::new(m.dim(), rows).unwrap();
                prop_assert_eq!(shuffled.row_reduce().rank, m.row_reduce().rank);
            }

            #[test]
            fn in_span_combination_reconstructs_target(
                (m, bits) in arb_matrix().prop_flat_map(|m| {
                    let dim = m.dim();
                    (Just(m), proptest::collection::vec(any::<bool>(), dim))
                }),
            ) {
                let target = Gf2Vector::from_bits(bits);
                if let Some(combo) = m.in_span(&target).unwrap() {
                    let mut acc = Gf2Vector::zeros(m.dim());
                    for &i in &combo {
                        acc.xor_assign(m.row(i));
                    }
                    prop_assert_eq!(acc, target);
                }
            }
        }
    }
}
