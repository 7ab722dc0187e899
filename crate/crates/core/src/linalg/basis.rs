use std::collections::{BTreeMap, HashMap};

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub id: String,
    pub degree: Bidegree,
}

impl Generator {
    pub fn new(id: impl Into<String>, degree: Bidegree) -> Self {
        Self {
            id: id.into(),
            degree,
        }
    }
}

/// An ordered list of named generators presenting the free module
/// `⊕ M2·g_i` over `M2 = F2[τ]`.
#[derive(Clone, Debug, Default)]
pub struct GradedBasis {
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl PartialEq for GradedBasis {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for GradedBasis {}

impl GradedBasis {
    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        let mut index = HashMap::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if index.insert(g.id.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator(g.id.clone()));
            }
        }
        Ok(Self { gens, index })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn degree(&self, i: usize) -> Bidegree {
        self.gens[i].degree
    }

    pub fn id(&self, i: usize) -> &str {
        &self.gens[i].id
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Generator indices grouped by internal degree, each group in basis order.
    pub fn by_internal_degree(&self) -> BTreeMap<i32, Vec<usize>> {
        let mut out: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for (i, g) in self.gens.iter().enumerate() {
            out.entry(g.degree.s).or_default().push(i);
        }
        out
    }

    /// Generator indices grouped by exact bidegree.
    pub fn by_bidegree(&self) -> BTreeMap<Bidegree, Vec<usize>> {
        let mut out: BTreeMap<Bidegree, Vec<usize>> = BTreeMap::new();
        for (i, g) in self.gens.iter().enumerate() {
            out.entry(g.degree).or_default().push(i);
        }
        out
    }

    /// Every generator degree moved by `shift`; ids unchanged.
    pub fn shifted(&self, shift: Bidegree) -> Self {
        Self {
            gens: self
                .gens
                .iter()
                .map(|g| Generator::new(g.id.clone(), g.degree + shift))
                .collect(),
            index: self.index.clone(),
        }
    }
}

/// An F2-basis element `τ^k g` of the free module on a [`GradedBasis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpandedElement {
    pub generator: usize,
    pub tau_power: u32,
}

/// The F2-basis `{τ^{w - w_i} g_i : s_i = s, w_i <= w}` of the `(s, w)`
/// component of the free module on `basis`.
pub fn expand_bidegree(basis: &GradedBasis, degree: Bidegree) -> Vec<ExpandedElement> {
    basis
        .generators()
        .iter()
        .enumerate()
        .filter(|(_, g)| g.degree.s == degree.s && g.degree.w <= degree.w)
        .map(|(i, g)| ExpandedElement {
            generator: i,
            tau_power: (degree.w - g.degree.w) as u32,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn joker_basis() -> GradedBasis {
        GradedBasis::new(vec![
            Generator::new("x", Bidegree::new(0, 0)),
            Generator::new("x1", Bidegree::new(1, 0)),
            Generator::new("y", Bidegree::new(2, 0)),
            Generator::new("z3", Bidegree::new(3, 1)),
            Generator::new("z4", Bidegree::new(4, 1)),
        ])
        .unwrap()
    }

    #[test]
    fn duplicate_ids_rejected() {
        let err = GradedBasis::new(vec![
            Generator::new("a", Bidegree::ZERO),
            Generator::new("a", Bidegree::SQ1),
        ])
        .unwrap_err();
        assert_eq!(err, Error::DuplicateGenerator("a".into()));
    }

    #[test]
    fn expand_unit_in_weight_two() {
        let b = GradedBasis::new(vec![Generator::new("g", Bidegree::ZERO)]).unwrap();
        assert_eq!(
            expand_bidegree(&b, Bidegree::new(0, 2)),
            vec![ExpandedElement {
                generator: 0,
                tau_power: 2
            }]
        );
    }

    #[test]
    fn expand_joker_at_two_one() {
        let b = joker_basis();
        assert_eq!(
            expand_bidegree(&b, Bidegree::new(2, 1)),
            vec![ExpandedElement {
                generator: 2,
                tau_power: 1
            }]
        );
        // z3 sits at weight 1, so it is absent at weight 0.
        assert!(expand_bidegree(&b, Bidegree::new(3, 0)).is_empty());
        assert!(expand_bidegree(&b, Bidegree::new(7, 5)).is_empty());
    }
}
