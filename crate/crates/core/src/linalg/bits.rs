//! Dense bit vectors over F2 and an incremental echelon form.
//!
//! The echelon form keys every stored row by its lowest set bit, so a vector
//! is reduced by sweeping the rows in ascending pivot order. Each stored row
//! can carry a combination vector recording which inserted inputs it is the
//! sum of; this is what turns a column sweep into a kernel computation.

use std::collections::BTreeMap;
use std::fmt;

/// A fixed-length vector over F2, packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn unit(len: usize, bit: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(bit);
        v
    }

    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.toggle(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range (len={})", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range (len={})", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range (len={})", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn lowest_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of set bits in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k * 64 + bit)
            })
        })
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "BitVec[{s}]")
    }
}

#[derive(Clone, Debug)]
struct Row {
    vector: BitVec,
    combination: BitVec,
}

/// Row echelon form of a growing set of vectors, with optional tracking of
/// how each stored row is expressed in terms of the inserted inputs.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    inputs: usize,
    rows: BTreeMap<usize, Row>,
}

impl Echelon {
    /// `inputs` is the length of combination vectors; use 0 when the
    /// combinations are not needed.
    pub fn new(dim: usize, inputs: usize) -> Self {
        Self {
            dim,
            inputs,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduces `v` against the stored rows. Returns the residual together
    /// with the combination of inputs that was subtracted.
    pub fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut residual = v.clone();
        let mut combination = BitVec::zeros(self.inputs);
        for (&pivot, row) in &self.rows {
            if residual.get(pivot) {
                residual.xor_assign(&row.vector);
                if self.inputs > 0 {
                    combination.xor_assign(&row.combination);
                }
            }
        }
        (residual, combination)
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Inserts `v`, labelled by the combination vector `label`. If `v`
    /// depends on the stored rows, nothing is stored and the combination of
    /// inputs summing to zero (including `label`) is returned in `Err`.
    pub fn insert_with(&mut self, v: &BitVec, label: BitVec) -> Result<usize, BitVec> {
        let (residual, mut combination) = self.reduce(v);
        if self.inputs > 0 {
            combination.xor_assign(&label);
        }
        match residual.lowest_one() {
            None => Err(combination),
            Some(pivot) => {
                self.rows.insert(
                    pivot,
                    Row {
                        vector: residual,
                        combination,
                    },
                );
                Ok(pivot)
            }
        }
    }

    /// Inserts an untracked vector; returns whether it was independent.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        let label = BitVec::zeros(self.inputs);
        self.insert_with(v, label).is_ok()
    }

    /// Expresses `v` as a sum of inputs, if it lies in the span.
    pub fn solve(&self, v: &BitVec) -> Option<BitVec> {
        let (residual, combination) = self.reduce(v);
        residual.is_zero().then_some(combination)
    }
}
