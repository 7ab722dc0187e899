use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::linalg::{F2Map, GradedBasis, MonomialMap};

/// One of the two algebra generators of `A(1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Square {
    Sq1,
    Sq2,
}

impl Square {
    pub fn degree(self) -> Bidegree {
        match self {
            Square::Sq1 => Bidegree::SQ1,
            Square::Sq2 => Bidegree::SQ2,
        }
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Square::Sq1 => write!(f, "Sq1"),
            Square::Sq2 => write!(f, "Sq2"),
        }
    }
}

use Square::{Sq1, Sq2};

/// The `M2`-basis of `A(1)` as words in `Sq1`, `Sq2`, read left to right as
/// a product (the rightmost operation acts first).
pub const A1_WORDS: [&[Square]; 8] = [
    &[],
    &[Sq1],
    &[Sq2],
    &[Sq1, Sq2],
    &[Sq2, Sq1],
    &[Sq1, Sq2, Sq1],
    &[Sq2, Sq1, Sq2],
    &[Sq1, Sq2, Sq1, Sq2],
];

pub fn word_name(word: &[Square]) -> String {
    if word.is_empty() {
        "1".to_string()
    } else {
        word.iter().map(Square::to_string).collect()
    }
}

pub fn word_degree(word: &[Square]) -> Bidegree {
    word.iter().fold(Bidegree::ZERO, |d, sq| d + sq.degree())
}

/// The defining relations of `A(1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    /// `Sq1 Sq1 = 0`
    Sq1Sq1,
    /// `Sq2 Sq2 = τ Sq1 Sq2 Sq1`
    Sq2Sq2,
    /// `Sq1 Sq2 Sq1 Sq2 = Sq2 Sq1 Sq2 Sq1`
    Braid,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Sq1Sq1 => write!(f, "Sq1Sq1 = 0"),
            Relation::Sq2Sq2 => write!(f, "Sq2Sq2 = τ·Sq1Sq2Sq1"),
            Relation::Braid => write!(f, "Sq1Sq2Sq1Sq2 = Sq2Sq1Sq2Sq1"),
        }
    }
}

/// A failed relation, witnessed at a generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub relation: Relation,
    pub generator: String,
    pub bidegree: Bidegree,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at {} in bidegree {}",
            self.relation, self.generator, self.bidegree
        )
    }
}

/// Rows of two same-shaped maps that disagree.
fn differing_rows<'a>(
    n: usize,
    a: impl Fn(usize) -> &'a [usize],
    b: impl Fn(usize) -> &'a [usize],
) -> Vec<usize> {
    (0..n).filter(|&i| a(i) != b(i)).collect()
}

/// An `M2`-free `A(1)`-module: a graded basis with `Sq1` and `Sq2` actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A1Module {
    name: String,
    basis: Arc<GradedBasis>,
    sq1: MonomialMap,
    sq2: MonomialMap,
}

impl A1Module {
    /// Checks shapes and degrees only; see [`A1Module::validate`] for the
    /// relations.
    pub fn new(
        name: impl Into<String>,
        basis: Arc<GradedBasis>,
        sq1: MonomialMap,
        sq2: MonomialMap,
    ) -> Result<Self> {
        for (map, sq) in [(&sq1, Sq1), (&sq2, Sq2)] {
            if **map.source() != *basis || **map.target() != *basis || map.degree() != sq.degree() {
                return Err(Error::ShapeMismatch);
            }
        }
        let sq1 = sq1.rebase(basis.clone(), basis.clone(), Bidegree::SQ1)?;
        let sq2 = sq2.rebase(basis.clone(), basis.clone(), Bidegree::SQ2)?;
        Ok(Self {
            name: name.into(),
            basis,
            sq1,
            sq2,
        })
    }

    /// Builds a module from `(id, s, w)` generators and `(source, target)`
    /// edges for each operation.
    pub fn from_edges(
        name: &str,
        gens: &[(&str, i32, i32)],
        sq1: &[(&str, &str)],
        sq2: &[(&str, &str)],
    ) -> Result<Self> {
        let basis = Arc::new(GradedBasis::new(
            gens.iter()
                .map(|&(id, s, w)| crate::linalg::Generator::new(id, Bidegree::new(s, w)))
                .collect(),
        )?);
        let lookup = |id: &str| {
            basis
                .index_of(id)
                .ok_or_else(|| Error::Internal(format!("unknown generator `{id}`")))
        };
        let edges = |list: &[(&str, &str)]| -> Result<Vec<(usize, usize)>> {
            list.iter()
                .map(|&(a, b)| Ok((lookup(a)?, lookup(b)?)))
                .collect()
        };
        let sq1 = MonomialMap::new(basis.clone(), basis.clone(), Bidegree::SQ1, edges(sq1)?)?;
        let sq2 = MonomialMap::new(basis.clone(), basis.clone(), Bidegree::SQ2, edges(sq2)?)?;
        Ok(Self {
            name: name.to_string(),
            basis,
            sq1,
            sq2,
        })
    }

    pub fn zero(name: &str) -> Self {
        let basis = Arc::new(GradedBasis::empty());
        Self {
            name: name.to_string(),
            sq1: MonomialMap::zero(basis.clone(), basis.clone(), Bidegree::SQ1),
            sq2: MonomialMap::zero(basis.clone(), basis.clone(), Bidegree::SQ2),
            basis,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    /// Rank as a free `M2`-module.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn sq1(&self) -> &MonomialMap {
        &self.sq1
    }

    pub fn sq2(&self) -> &MonomialMap {
        &self.sq2
    }

    pub fn action(&self, sq: Square) -> &MonomialMap {
        match sq {
            Sq1 => &self.sq1,
            Sq2 => &self.sq2,
        }
    }

    /// The action of a word (rightmost operation first).
    pub fn word_action(&self, word: &[Square]) -> MonomialMap {
        word.iter()
            .fold(MonomialMap::identity(self.basis.clone()), |acc, &sq| {
                acc.compose(self.action(sq)).expect("endomorphisms compose")
            })
    }

    /// All relation failures; empty means `self` is an `A(1)`-module.
    pub fn violations(&self) -> Vec<Violation> {
        let n = self.basis.len();
        let mut out = Vec::new();
        let mut report = |relation, rows: Vec<usize>| {
            out.extend(rows.into_iter().map(|i| Violation {
                relation,
                generator: self.basis.id(i).to_string(),
                bidegree: self.basis.degree(i),
            }));
        };

        let sq1sq1 = self.word_action(&[Sq1, Sq1]);
        report(
            Relation::Sq1Sq1,
            (0..n).filter(|&i| !sq1sq1.row(i).is_empty()).collect(),
        );

        let sq2sq2 = self.word_action(&[Sq2, Sq2]);
        let tau_sq121 = self.word_action(&[Sq1, Sq2, Sq1]).tau_times(1);
        debug_assert_eq!(sq2sq2.degree(), tau_sq121.degree());
        report(
            Relation::Sq2Sq2,
            differing_rows(n, |i| sq2sq2.row(i), |i| tau_sq121.row(i)),
        );

        let left = self.word_action(&[Sq1, Sq2, Sq1, Sq2]);
        let right = self.word_action(&[Sq2, Sq1, Sq2, Sq1]);
        report(
            Relation::Braid,
            differing_rows(n, |i| left.row(i), |i| right.row(i)),
        );
        out
    }

    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    /// [`A1Module::validate`] folded into the crate error type.
    pub fn ensure_valid(&self) -> Result<()> {
        self.validate().map_err(|v| Error::InvalidModule {
            name: self.name.clone(),
            summary: v
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; "),
        })
    }
}

/// A degree-preserving map of `A(1)`-modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub source: A1Module,
    pub target: A1Module,
    pub map: MonomialMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutationFailure {
    pub generator: String,
    pub operation: Square,
}

impl ModuleMap {
    pub fn new(source: A1Module, target: A1Module, map: MonomialMap) -> Result<Self> {
        if **map.source() != **source.basis()
            || **map.target() != **target.basis()
            || map.degree() != Bidegree::ZERO
        {
            return Err(Error::ShapeMismatch);
        }
        let map = map.rebase(
            source.basis().clone(),
            target.basis().clone(),
            Bidegree::ZERO,
        )?;
        Ok(Self {
            source,
            target,
            map,
        })
    }

    pub fn identity(module: &A1Module) -> Self {
        Self {
            source: module.clone(),
            target: module.clone(),
            map: MonomialMap::identity(module.basis().clone()),
        }
    }

    pub fn zero(source: &A1Module, target: &A1Module) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            map: MonomialMap::zero(
                source.basis().clone(),
                target.basis().clone(),
                Bidegree::ZERO,
            ),
        }
    }

    /// Generators at which `map ∘ sq ≠ sq ∘ map`.
    pub fn commutation_failures(&self) -> Vec<CommutationFailure> {
        let mut out = Vec::new();
        for sq in [Sq1, Sq2] {
            let before = self
                .map
                .compose(self.source.action(sq))
                .expect("bases match");
            let after = self
                .target
                .action(sq)
                .compose(&self.map)
                .expect("bases match");
            for i in 0..self.source.rank() {
                if before.row(i) != after.row(i) {
                    out.push(CommutationFailure {
                        generator: self.source.basis().id(i).to_string(),
                        operation: sq,
                    });
                }
            }
        }
        out
    }

    pub fn validate(&self) -> std::result::Result<(), Vec<CommutationFailure>> {
        let v = self.commutation_failures();
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }
}

/// A module over `A(1)/τ`: F2-vector space with `Sq1`, `Sq2` actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2A1Module {
    pub name: String,
    pub basis: Arc<GradedBasis>,
    pub sq1: F2Map,
    pub sq2: F2Map,
}

impl F2A1Module {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn action(&self, sq: Square) -> &F2Map {
        match sq {
            Sq1 => &self.sq1,
            Sq2 => &self.sq2,
        }
    }

    pub fn word_action(&self, word: &[Square]) -> F2Map {
        let id = F2Map::new(
            self.basis.clone(),
            self.basis.clone(),
            Bidegree::ZERO,
            (0..self.dim()).map(|i| (i, i)),
        )
        .expect("identity is homogeneous");
        word.iter().fold(id, |acc, &sq| {
            acc.compose(self.action(sq)).expect("endomorphisms compose")
        })
    }

    /// The `τ = 0` relations: `Sq1² = 0`, `Sq2² = 0`, braid.
    pub fn violations(&self) -> Vec<Violation> {
        let n = self.dim();
        let mut out = Vec::new();
        let mut report = |relation, rows: Vec<usize>| {
            out.extend(rows.into_iter().map(|i| Violation {
                relation,
                generator: self.basis.id(i).to_string(),
                bidegree: self.basis.degree(i),
            }));
        };
        let a = self.word_action(&[Sq1, Sq1]);
        report(
            Relation::Sq1Sq1,
            (0..n).filter(|&i| !a.row(i).is_empty()).collect(),
        );
        let b = self.word_action(&[Sq2, Sq2]);
        report(
            Relation::Sq2Sq2,
            (0..n).filter(|&i| !b.row(i).is_empty()).collect(),
        );
        let l = self.word_action(&[Sq1, Sq2, Sq1, Sq2]);
        let r = self.word_action(&[Sq2, Sq1, Sq2, Sq1]);
        report(
            Relation::Braid,
            differing_rows(n, |i| l.row(i), |i| r.row(i)),
        );
        out
    }
}
