//! Free covers, the loop functor and evaluation maps.

use std::sync::Arc;

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::linalg::{
    is_surjective, kernel, restrict, BitVec, Echelon, Generator, GradedBasis, MonomialMap,
};
use crate::module::{catalog, dual, tensor, word_degree, word_name, A1Module, ModuleMap, A1_WORDS};

/// A surjection from a sum of shifted copies of `A(1)`.
#[derive(Clone, Debug)]
pub struct FreeCover {
    pub cover: A1Module,
    pub projection: ModuleMap,
    /// Shift of each free summand.
    pub generator_degrees: Vec<Bidegree>,
    /// Basis element of the covered module hit by each summand's unit, or
    /// `None` for a summand mapped by zero.
    pub lifts: Vec<Option<usize>>,
}

impl FreeCover {
    pub fn summands(&self) -> usize {
        self.generator_degrees.len()
    }

    /// The same cover with one more free summand at `shift`, mapped by zero.
    pub fn pad(&self, shift: Bidegree) -> Result<FreeCover> {
        let mut degrees = self.generator_degrees.clone();
        let mut lifts = self.lifts.clone();
        degrees.push(shift);
        lifts.push(None);
        build_cover(&self.projection.target, degrees, lifts)
    }
}

/// Basis elements spanning the indecomposables `M/(τM + Sq1·M + Sq2·M)`.
///
/// Modulo `τM`, the `(s, w)` part of `M` is spanned by the generators of
/// exact bidegree `(s, w)`, so the quotient is computed there: the images of
/// `Sq1` and `Sq2` are projected onto those generators and any generator
/// independent of them is kept.
pub fn indecomposables(m: &A1Module) -> Vec<usize> {
    let b = m.basis();
    let n = b.len();
    let by_s = b.by_internal_degree();
    let mut out = Vec::new();
    for (deg, idx) in b.by_bidegree() {
        let mut span = Echelon::new(n, 0);
        for (map, op) in [(m.sq1(), Bidegree::SQ1), (m.sq2(), Bidegree::SQ2)] {
            let from = deg - op;
            for &i in by_s.get(&from.s).into_iter().flatten() {
                if b.degree(i).w > from.w {
                    continue;
                }
                let image = BitVec::from_ones(
                    n,
                    map.row(i).iter().copied().filter(|&j| b.degree(j) == deg),
                );
                span.insert(&image);
            }
        }
        for i in idx {
            if span.insert(&BitVec::unit(n, i)) {
                out.push(i);
            }
        }
    }
    out
}

fn build_cover(
    m: &A1Module,
    degrees: Vec<Bidegree>,
    lifts: Vec<Option<usize>>,
) -> Result<FreeCover> {
    let a1 = catalog::a1();
    let words: Vec<MonomialMap> = A1_WORDS.iter().map(|w| m.word_action(w)).collect();

    let mut gens = Vec::new();
    let mut projection = Vec::new();
    let mut pad = 0;
    for (k, (&shift, lift)) in degrees.iter().zip(&lifts).enumerate() {
        let label = match lift {
            Some(i) => m.basis().id(*i).to_string(),
            None => {
                pad += 1;
                format!("pad{pad}")
            }
        };
        for (t, word) in A1_WORDS.iter().enumerate() {
            let c = gens.len();
            gens.push(Generator::new(
                format!("{label}|{}", word_name(word)),
                shift + word_degree(word),
            ));
            if let Some(i) = lift {
                projection.extend(words[t].row(*i).iter().map(|&j| (c, j)));
            }
        }
        debug_assert_eq!(gens.len(), 8 * (k + 1));
    }
    let basis = Arc::new(GradedBasis::new(gens)?);
    let shift_entries = |f: &MonomialMap| -> Vec<(usize, usize)> {
        (0..degrees.len())
            .flat_map(|k| f.entries().map(move |(i, j)| (8 * k + i, 8 * k + j)))
            .collect()
    };
    let sq1 = MonomialMap::new(
        basis.clone(),
        basis.clone(),
        Bidegree::SQ1,
        shift_entries(a1.sq1()),
    )?;
    let sq2 = MonomialMap::new(
        basis.clone(),
        basis.clone(),
        Bidegree::SQ2,
        shift_entries(a1.sq2()),
    )?;
    let cover = A1Module::new(format!("P({})", m.name()), basis.clone(), sq1, sq2)?;
    let map = MonomialMap::new(basis, m.basis().clone(), Bidegree::ZERO, projection)?;
    let projection = ModuleMap::new(cover.clone(), m.clone(), map)?;
    if let Err(failures) = projection.validate() {
        return Err(Error::Internal(format!(
            "cover projection is not A(1)-linear: {failures:?}"
        )));
    }
    Ok(FreeCover {
        cover,
        projection,
        generator_degrees: degrees,
        lifts,
    })
}

/// The free cover with one summand per indecomposable.
pub fn minimal_free_cover(m: &A1Module) -> Result<FreeCover> {
    let lifts = indecomposables(m);
    let degrees = lifts.iter().map(|&i| m.basis().degree(i)).collect();
    let cover = build_cover(m, degrees, lifts.into_iter().map(Some).collect())?;
    if !is_surjective(&cover.projection.map) {
        return Err(Error::Internal(format!(
            "minimal cover of `{}` is not surjective",
            m.name()
        )));
    }
    Ok(cover)
}

fn loop_name(name: &str) -> String {
    format!("Omega({name})")
}

/// The kernel of a cover's projection with the induced actions.
pub fn kernel_of_cover(cover: &FreeCover) -> Result<A1Module> {
    let k = kernel(&cover.projection.map);
    let sq1 = restrict(cover.cover.sq1(), &k.basis, &k.inclusion)?;
    let sq2 = restrict(cover.cover.sq2(), &k.basis, &k.inclusion)?;
    A1Module::new(loop_name(cover.projection.target.name()), k.basis, sq1, sq2)
}

/// `ΩM`, represented by the kernel of the minimal free cover.
pub fn loop_module(m: &A1Module) -> Result<A1Module> {
    kernel_of_cover(&minimal_free_cover(m)?)
}

/// `Ω^k M`; negative powers are `D Ω^{-k} D`.
pub fn loop_power(m: &A1Module, k: i32) -> Result<A1Module> {
    if k >= 0 {
        (0..k).try_fold(m.clone(), |acc, _| loop_module(&acc))
    } else {
        let mut acc = dual(m);
        for _ in 0..(-k) {
            acc = loop_module(&acc)?;
        }
        Ok(dual(&acc).with_name(format!("Omega^{k}({})", m.name())))
    }
}

/// `DM ⊗ M → M2`, `δ_i ⊗ g_j ↦ δ_ij`.
pub fn evaluation_map(m: &A1Module) -> Result<ModuleMap> {
    let dm = dual(m);
    let source = tensor(&dm, m)?;
    let unit = catalog::unit();
    let n = m.rank();
    let entries = (0..n).map(|i| (i * n + i, 0));
    let map = MonomialMap::new(
        source.basis().clone(),
        unit.basis().clone(),
        Bidegree::ZERO,
        entries,
    )?;
    ModuleMap::new(source, unit, map)
}
