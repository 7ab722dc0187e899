//! Degreewise linear algebra for [`MonomialMap`]s.
//!
//! Every computation here works one internal degree at a time. Within an
//! internal degree, the expanded map at weight `w` is the bit matrix
//! restricted to source generators of weight at most `w`, so sweeping the
//! source generators in order of increasing weight visits every weight of
//! the window in one pass.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::linalg::basis::{Generator, GradedBasis};
use crate::linalg::bits::{BitVec, Echelon};
use crate::linalg::map::MonomialMap;

/// Rank over the fraction field `F2(τ)`, where every monomial is a unit.
pub fn generic_rank(f: &MonomialMap) -> usize {
    let mut echelon = Echelon::new(f.target().len(), 0);
    for i in 0..f.source().len() {
        echelon.insert(&BitVec::from_ones(
            f.target().len(),
            f.row(i).iter().copied(),
        ));
    }
    echelon.rank()
}

fn by_weight(basis: &GradedBasis, mut idx: Vec<usize>) -> Vec<usize> {
    idx.sort_by_key(|&i| (basis.degree(i).w, i));
    idx
}

/// An `M2`-basis of `ker f` together with its inclusion into `f.source()`.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub basis: Arc<GradedBasis>,
    pub inclusion: MonomialMap,
}

/// Computes `ker f` degreewise.
///
/// Source generators of one internal degree are swept in order of
/// `(weight, index)`. A dependency found while adding a weight-`w` column is
/// a kernel element at `(s, w)` that is not a τ-multiple of the kernel at
/// `(s, w - 1)`; these dependencies are exactly the new generators. Past the
/// largest source weight τ acts bijectively on the kernel, so nothing is
/// missed.
pub fn kernel(f: &MonomialMap) -> Kernel {
    let source = f.source();
    let mut gens = Vec::new();
    let mut incl_entries = Vec::new();
    for (s, idx) in source.by_internal_degree() {
        let sweep = by_weight(source, idx);
        let mut echelon = Echelon::new(f.target().len(), sweep.len());
        for (pos, &i) in sweep.iter().enumerate() {
            let column = BitVec::from_ones(f.target().len(), f.row(i).iter().copied());
            if let Err(dependency) = echelon.insert_with(&column, BitVec::unit(sweep.len(), pos)) {
                let k = gens.len();
                let w = source.degree(i).w;
                gens.push(Generator::new(format!("k{k}"), Bidegree::new(s, w)));
                incl_entries.extend(dependency.ones().map(|p| (k, sweep[p])));
            }
        }
    }
    let basis = Arc::new(GradedBasis::new(gens).expect("kernel ids are distinct"));
    let inclusion = MonomialMap::new(basis.clone(), source.clone(), Bidegree::ZERO, incl_entries)
        .expect("kernel vectors are supported in weights at most their own");
    debug_assert!(f.compose(&inclusion).map(|c| c.is_zero()).unwrap_or(false));
    Kernel { basis, inclusion }
}

/// Whether `f` is surjective in every bidegree.
///
/// Only target weights up to the largest target generator weight of each
/// internal degree need checking; above that τ is onto the cokernel.
pub fn is_surjective(f: &MonomialMap) -> bool {
    let (source, target) = (f.source(), f.target());
    let d = f.degree();
    let source_by_s = source.by_internal_degree();
    for (t, idx) in target.by_internal_degree() {
        let targets = by_weight(target, idx);
        let columns = source_by_s
            .get(&(t - d.s))
            .map(|c| by_weight(source, c.clone()))
            .unwrap_or_default();
        let mut echelon = Echelon::new(target.len(), 0);
        let mut next_col = 0;
        let mut rows_needed = 0;
        let mut k = 0;
        while k < targets.len() {
            let w = target.degree(targets[k]).w;
            while k < targets.len() && target.degree(targets[k]).w == w {
                rows_needed += 1;
                k += 1;
            }
            while next_col < columns.len() && source.degree(columns[next_col]).w + d.w <= w {
                let i = columns[next_col];
                echelon.insert(&BitVec::from_ones(target.len(), f.row(i).iter().copied()));
                next_col += 1;
            }
            if echelon.rank() < rows_needed {
                return false;
            }
        }
    }
    true
}

/// The map `g` on `kernel` with `incl ∘ g = f ∘ incl`, for an endomorphism
/// `f` of `incl.target()`.
pub fn restrict(
    f: &MonomialMap,
    kernel: &Arc<GradedBasis>,
    incl: &MonomialMap,
) -> Result<MonomialMap> {
    if !Arc::ptr_eq(incl.source(), kernel) && **incl.source() != **kernel {
        return Err(Error::CompositionMismatch);
    }
    if **f.source() != **f.target() {
        return Err(Error::ShapeMismatch);
    }
    let image = f.compose(incl)?;
    let ambient = incl.target().len();
    let d = f.degree();

    // Queries grouped by the bidegree their image lives in.
    let mut queries: BTreeMap<Bidegree, Vec<usize>> = BTreeMap::new();
    for k in 0..kernel.len() {
        queries.entry(kernel.degree(k) + d).or_default().push(k);
    }
    let kernel_by_s = kernel.by_internal_degree();

    let mut entries = Vec::new();
    for (deg, ks) in queries {
        let candidates: Vec<usize> = kernel_by_s
            .get(&deg.s)
            .into_iter()
            .flatten()
            .copied()
            .filter(|&k| kernel.degree(k).w <= deg.w)
            .collect();
        let mut echelon = Echelon::new(ambient, candidates.len());
        for (pos, &k) in candidates.iter().enumerate() {
            let v = BitVec::from_ones(ambient, incl.row(k).iter().copied());
            // A dependent candidate adds nothing to the span.
            let _ = echelon.insert_with(&v, BitVec::unit(candidates.len(), pos));
        }
        for k in ks {
            let v = BitVec::from_ones(ambient, image.row(k).iter().copied());
            let solution = echelon
                .solve(&v)
                .ok_or_else(|| Error::MembershipFailure(kernel.id(k).to_string()))?;
            entries.extend(solution.ones().map(|p| (k, candidates[p])));
        }
    }
    MonomialMap::new(kernel.clone(), kernel.clone(), d, entries)
}
