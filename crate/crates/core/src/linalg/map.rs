//! Homogeneous maps between free modules on graded bases.
//!
//! A homogeneous element of `F2[τ]` is a monomial, so a homogeneous map of
//! free `F2[τ]`-modules is determined by a bit matrix: the entry `(i, j)`
//! stands for `τ^k` with `k = w_i + b - w_j` forced by the degrees.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::linalg::basis::GradedBasis;

fn same_basis(a: &Arc<GradedBasis>, b: &Arc<GradedBasis>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Sparse bit matrix stored as sorted target lists, one per source index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Rows(Vec<Vec<usize>>);

impl Rows {
    fn from_entries(nsource: usize, entries: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut sets = vec![BTreeSet::new(); nsource];
        for (i, j) in entries {
            sets[i].insert(j);
        }
        Rows(sets.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    /// Rows of `outer ∘ inner`.
    fn compose(outer: &Rows, inner: &Rows) -> Rows {
        Rows(
            inner
                .0
                .iter()
                .map(|mid| {
                    let mut acc = BTreeSet::new();
                    for &m in mid {
                        for &t in &outer.0[m] {
                            if !acc.insert(t) {
                                acc.remove(&t);
                            }
                        }
                    }
                    acc.into_iter().collect()
                })
                .collect(),
        )
    }

    fn xor(a: &Rows, b: &Rows) -> Rows {
        Rows(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| {
                    let x: BTreeSet<_> = x.iter().copied().collect();
                    let y: BTreeSet<_> = y.iter().copied().collect();
                    x.symmetric_difference(&y).copied().collect()
                })
                .collect(),
        )
    }

    fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |&j| (i, j)))
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(Vec::is_empty)
    }
}

/// A homogeneous `M2`-linear map with τ-monomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    source: Arc<GradedBasis>,
    target: Arc<GradedBasis>,
    degree: Bidegree,
    rows: Rows,
}

impl MonomialMap {
    /// Builds the map with bit-1 coefficients at `entries` (duplicates are
    /// merged). Rejects any entry whose forced τ-valuation is negative or
    /// whose internal degrees do not match.
    pub fn new(
        source: Arc<GradedBasis>,
        target: Arc<GradedBasis>,
        degree: Bidegree,
        entries: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let rows = Rows::from_entries(source.len(), entries);
        for (i, j) in rows.entries() {
            if j >= target.len() {
                return Err(Error::Internal(format!("target index {j} out of range")));
            }
            let (si, sj) = (source.degree(i), target.degree(j));
            if sj.s != si.s + degree.s {
                return Err(Error::DegreeConstraint {
                    source_id: source.id(i).to_string(),
                    target: target.id(j).to_string(),
                    detail: format!(
                        "target internal degree must be {} but is {}",
                        si.s + degree.s,
                        sj.s
                    ),
                });
            }
            if si.w + degree.w - sj.w < 0 {
                return Err(Error::DegreeConstraint {
                    source_id: source.id(i).to_string(),
                    target: target.id(j).to_string(),
                    detail: format!("forced τ-valuation {} is negative", si.w + degree.w - sj.w),
                });
            }
        }
        Ok(Self {
            source,
            target,
            degree,
            rows,
        })
    }

    pub fn zero(source: Arc<GradedBasis>, target: Arc<GradedBasis>, degree: Bidegree) -> Self {
        let rows = Rows(vec![Vec::new(); source.len()]);
        Self {
            source,
            target,
            degree,
            rows,
        }
    }

    pub fn identity(basis: Arc<GradedBasis>) -> Self {
        let rows = Rows((0..basis.len()).map(|i| vec![i]).collect());
        Self {
            source: basis.clone(),
            target: basis,
            degree: Bidegree::ZERO,
            rows,
        }
    }

    /// `τ^k` times this map: same bits, weight raised by `k`.
    pub fn tau_times(&self, k: u32) -> Self {
        Self {
            degree: self.degree + Bidegree::new(0, k as i32),
            ..self.clone()
        }
    }

    pub fn source(&self) -> &Arc<GradedBasis> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedBasis> {
        &self.target
    }

    pub fn degree(&self) -> Bidegree {
        self.degree
    }

    /// Target indices hit by source generator `i`, ascending.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows.0[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows.0[i].binary_search(&j).is_ok()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.entries()
    }

    pub fn num_entries(&self) -> usize {
        self.rows.0.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_zero()
    }

    /// The forced exponent of τ in entry `(i, j)`.
    pub fn valuation(&self, i: usize, j: usize) -> u32 {
        (self.source.degree(i).w + self.degree.w - self.target.degree(j).w) as u32
    }

    /// Same bits, with both bases replaced by equal-length ones; degree
    /// constraints are rechecked.
    pub fn rebase(
        &self,
        source: Arc<GradedBasis>,
        target: Arc<GradedBasis>,
        degree: Bidegree,
    ) -> Result<Self> {
        if source.len() != self.source.len() || target.len() != self.target.len() {
            return Err(Error::ShapeMismatch);
        }
        Self::new(source, target, degree, self.entries())
    }

    /// `f.compose(g)` is `f ∘ g`.
    pub fn compose(&self, inner: &MonomialMap) -> Result<MonomialMap> {
        if !same_basis(&inner.target, &self.source) {
            return Err(Error::CompositionMismatch);
        }
        Ok(MonomialMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            degree: self.degree + inner.degree,
            rows: Rows::compose(&self.rows, &inner.rows),
        })
    }

    pub fn add(&self, other: &MonomialMap) -> Result<MonomialMap> {
        if !same_basis(&self.source, &other.source)
            || !same_basis(&self.target, &other.target)
            || self.degree != other.degree
        {
            return Err(Error::ShapeMismatch);
        }
        Ok(MonomialMap {
            rows: Rows::xor(&self.rows, &other.rows),
            ..self.clone()
        })
    }

    /// The entries of valuation zero, as a map of F2-vector spaces.
    pub fn reduce_mod_tau(&self) -> F2Map {
        let entries = self
            .entries()
            .filter(|&(i, j)| self.valuation(i, j) == 0)
            .collect::<Vec<_>>();
        F2Map {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            rows: Rows::from_entries(self.source.len(), entries),
        }
    }
}

/// A homogeneous map of graded F2-vector spaces with bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Map {
    source: Arc<GradedBasis>,
    target: Arc<GradedBasis>,
    degree: Bidegree,
    rows: Rows,
}

impl F2Map {
    pub fn new(
        source: Arc<GradedBasis>,
        target: Arc<GradedBasis>,
        degree: Bidegree,
        entries: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let rows = Rows::from_entries(source.len(), entries);
        for (i, j) in rows.entries() {
            if j >= target.len() {
                return Err(Error::Internal(format!("target index {j} out of range")));
            }
            if target.degree(j) != source.degree(i) + degree {
                return Err(Error::DegreeConstraint {
                    source_id: source.id(i).to_string(),
                    target: target.id(j).to_string(),
                    detail: format!(
                        "target degree must be {} but is {}",
                        source.degree(i) + degree,
                        target.degree(j)
                    ),
                });
            }
        }
        Ok(Self {
            source,
            target,
            degree,
            rows,
        })
    }

    pub fn zero(source: Arc<GradedBasis>, target: Arc<GradedBasis>, degree: Bidegree) -> Self {
        let rows = Rows(vec![Vec::new(); source.len()]);
        Self {
            source,
            target,
            degree,
            rows,
        }
    }

    pub fn source(&self) -> &Arc<GradedBasis> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedBasis> {
        &self.target
    }

    pub fn degree(&self) -> Bidegree {
        self.degree
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows.0[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows.0[i].binary_search(&j).is_ok()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.entries()
    }

    pub fn num_entries(&self) -> usize {
        self.rows.0.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_zero()
    }

    pub fn compose(&self, inner: &F2Map) -> Result<F2Map> {
        if !same_basis(&inner.target, &self.source) {
            return Err(Error::CompositionMismatch);
        }
        Ok(F2Map {
            source: inner.source.clone(),
            target: self.target.clone(),
            degree: self.degree + inner.degree,
            rows: Rows::compose(&self.rows, &inner.rows),
        })
    }

    pub fn add(&self, other: &F2Map) -> Result<F2Map> {
        if !same_basis(&self.source, &other.source)
            || !same_basis(&self.target, &other.target)
            || self.degree != other.degree
        {
            return Err(Error::ShapeMismatch);
        }
        Ok(F2Map {
            rows: Rows::xor(&self.rows, &other.rows),
            ..self.clone()
        })
    }
}
