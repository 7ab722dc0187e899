//! Margolis homology of `M/τ` for `Q0`, `Q1` and `Sq2`, and the decision
//! procedures built on it: projectivity, invertibility, and stable
//! equivalence of maps.

mod d8;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg};

use serde::Serialize;
use serde_json::{json, Value};

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::linalg::{BitVec, Echelon, F2Map, GradedBasis};
use crate::module::{quotient_tau, tensor, A1Module, F2A1Module, ModuleMap, Square};

pub use d8::{d8_subalgebra_dimension, verify_d8_presentation, GroupAlgebra};

/// The three square-zero elements whose homologies detect projectivity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Differential {
    Q0,
    Q1,
    #[serde(rename = "Sq2")]
    Sq2,
}

impl Differential {
    pub const ALL: [Differential; 3] = [Differential::Q0, Differential::Q1, Differential::Sq2];

    pub fn degree(self) -> Bidegree {
        match self {
            Differential::Q0 => Bidegree::SQ1,
            Differential::Q1 => Bidegree::new(3, 1),
            Differential::Sq2 => Bidegree::SQ2,
        }
    }
}

impl fmt::Display for Differential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Differential::Q0 => write!(f, "Q0"),
            Differential::Q1 => write!(f, "Q1"),
            Differential::Sq2 => write!(f, "Sq2"),
        }
    }
}

/// `Q0 = Sq1`, `Q1 = Sq2Sq1 + Sq1Sq2`, or `Sq2`, acting on `M/τ`.
pub fn differential(mt: &F2A1Module, x: Differential) -> Result<F2Map> {
    let d = match x {
        Differential::Q0 => mt.sq1.clone(),
        Differential::Q1 => mt
            .word_action(&[Square::Sq2, Square::Sq1])
            .add(&mt.word_action(&[Square::Sq1, Square::Sq2]))?,
        Differential::Sq2 => mt.sq2.clone(),
    };
    if !d.compose(&d)?.is_zero() {
        return Err(Error::SquareNotZero(x));
    }
    Ok(d)
}

/// Homology of one differential, bidegree by bidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub differential: Differential,
    /// Nonzero dimensions only.
    pub dims: BTreeMap<Bidegree, usize>,
    /// One cycle per homology class, as a set of basis indices.
    pub representatives: Vec<(Bidegree, Vec<usize>)>,
}

impl Homology {
    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// The bidegree of a one-dimensional homology.
    pub fn single_class(&self) -> Option<Bidegree> {
        match self.dims.iter().collect::<Vec<_>>().as_slice() {
            [(&b, &1)] => Some(b),
            _ => None,
        }
    }

    pub fn to_json(&self, basis: &GradedBasis) -> Value {
        let dims: Vec<Value> = self
            .dims
            .iter()
            .map(|(b, d)| json!([b.s, b.w, d]))
            .collect();
        let reps: Vec<Value> = self
            .representatives
            .iter()
            .map(|(b, cycle)| {
                json!({
                    "bidegree": [b.s, b.w],
                    "cycle": cycle.iter().map(|&i| basis.id(i)).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "differential": self.differential,
            "dims": dims,
            "representatives": reps,
        })
    }
}

fn component_vector(n: usize, ones: &[usize]) -> BitVec {
    BitVec::from_ones(n, ones.iter().copied())
}

/// Cycles modulo boundaries, with representatives taken as the cycles that
/// stay independent after the boundaries are put in echelon form.
pub fn homology(mt: &F2A1Module, x: Differential) -> Result<Homology> {
    let d = differential(mt, x)?;
    let n = mt.dim();
    let parts = mt.basis.by_bidegree();
    let mut dims = BTreeMap::new();
    let mut representatives = Vec::new();
    for (&b, idx) in &parts {
        // Cycles at b: dependencies among the images of the generators at b.
        let mut images = Echelon::new(n, idx.len());
        let mut cycles = Vec::new();
        for (pos, &i) in idx.iter().enumerate() {
            if let Err(comb) =
                images.insert_with(&component_vector(n, d.row(i)), BitVec::unit(idx.len(), pos))
            {
                cycles.push(BitVec::from_ones(n, comb.ones().map(|p| idx[p])));
            }
        }
        if cycles.is_empty() {
            continue;
        }
        let mut classes = Echelon::new(n, 0);
        if let Some(below) = parts.get(&(b - x.degree())) {
            for &i in below {
                classes.insert(&component_vector(n, d.row(i)));
            }
        }
        let mut count = 0;
        for z in cycles {
            if classes.insert(&z) {
                representatives.push((b, z.ones().collect()));
                count += 1;
            }
        }
        if count > 0 {
            dims.insert(b, count);
        }
    }
    Ok(Homology {
        differential: x,
        dims,
        representatives,
    })
}

/// All three Margolis homologies of `M/τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MargolisReport {
    pub q0: Homology,
    pub q1: Homology,
    pub sq2: Homology,
}

impl MargolisReport {
    pub fn get(&self, x: Differential) -> &Homology {
        match x {
            Differential::Q0 => &self.q0,
            Differential::Q1 => &self.q1,
            Differential::Sq2 => &self.sq2,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &Homology> {
        [&self.q0, &self.q1, &self.sq2].into_iter()
    }

    pub fn to_json(&self, basis: &GradedBasis) -> Value {
        Value::Array(self.iter().map(|h| h.to_json(basis)).collect())
    }
}

pub fn margolis_report_f2(mt: &F2A1Module) -> Result<MargolisReport> {
    Ok(MargolisReport {
        q0: homology(mt, Differential::Q0)?,
        q1: homology(mt, Differential::Q1)?,
        sq2: homology(mt, Differential::Sq2)?,
    })
}

pub fn margolis_report(m: &A1Module) -> Result<MargolisReport> {
    margolis_report_f2(&quotient_tau(m))
}

/// Bidegrees of the three one-dimensional homologies of an invertible
/// module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub q0: Bidegree,
    pub q1: Bidegree,
    pub sq2: Bidegree,
}

impl Signature {
    pub const ZERO: Signature = Signature {
        q0: Bidegree::ZERO,
        q1: Bidegree::ZERO,
        sq2: Bidegree::ZERO,
    };

    pub fn to_vector(self) -> [i64; 6] {
        [self.q0, self.q1, self.sq2]
            .map(|b| [b.s as i64, b.w as i64])
            .concat()
            .try_into()
            .expect("six entries")
    }

    pub fn from_vector(v: [i64; 6]) -> Self {
        let b = |k: usize| Bidegree::new(v[k] as i32, v[k + 1] as i32);
        Signature {
            q0: b(0),
            q1: b(2),
            sq2: b(4),
        }
    }

    pub fn scale(self, k: i32) -> Self {
        Signature {
            q0: self.q0.scale(k),
            q1: self.q1.scale(k),
            sq2: self.sq2.scale(k),
        }
    }

    pub fn shift(self, by: Bidegree) -> Self {
        Signature {
            q0: self.q0 + by,
            q1: self.q1 + by,
            sq2: self.sq2 + by,
        }
    }
}

impl Add for Signature {
    type Output = Signature;
    fn add(self, rhs: Signature) -> Signature {
        Signature {
            q0: self.q0 + rhs.q0,
            q1: self.q1 + rhs.q1,
            sq2: self.sq2 + rhs.sq2,
        }
    }
}

impl Neg for Signature {
    type Output = Signature;
    fn neg(self) -> Signature {
        self.scale(-1)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(Q0 {}, Q1 {}, Sq2 {})", self.q0, self.q1, self.sq2)
    }
}

impl MargolisReport {
    pub fn signature(&self) -> Option<Signature> {
        Some(Signature {
            q0: self.q0.single_class()?,
            q1: self.q1.single_class()?,
            sq2: self.sq2.single_class()?,
        })
    }
}

/// `M` is projective iff all three homologies of `M/τ` vanish (`M2`-freeness
/// holds by representation).
pub fn is_projective(m: &A1Module) -> Result<bool> {
    Ok(margolis_report(m)?.iter().all(Homology::is_zero))
}

/// `Some(signature)` iff all three homologies are one-dimensional.
pub fn is_invertible(m: &A1Module) -> Result<Option<Signature>> {
    Ok(margolis_report(m)?.signature())
}

/// Whether `φ/τ` induces isomorphisms on all three homologies.
pub fn map_is_stable_equivalence(phi: &ModuleMap) -> Result<bool> {
    let mt = quotient_tau(&phi.source);
    let nt = quotient_tau(&phi.target);
    let f = phi.map.reduce_mod_tau();
    for x in Differential::ALL {
        let hm = homology(&mt, x)?;
        let hn = homology(&nt, x)?;
        if hm.dims != hn.dims {
            return Ok(false);
        }
        // Equal dimensions, so an iso iff injective on homology.
        let dn = differential(&nt, x)?;
        let n = nt.dim();
        let target_parts = nt.basis.by_bidegree();
        for (&b, &dim) in &hm.dims {
            let mut span = Echelon::new(n, 0);
            if let Some(below) = target_parts.get(&(b - x.degree())) {
                for &i in below {
                    span.insert(&component_vector(n, dn.row(i)));
                }
            }
            let boundaries = span.rank();
            for (_, cycle) in hm.representatives.iter().filter(|(rb, _)| *rb == b) {
                let mut image = BitVec::zeros(n);
                for &i in cycle {
                    for &j in f.row(i) {
                        image.toggle(j);
                    }
                }
                span.insert(&image);
            }
            if span.rank() != boundaries + dim {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Bigraded convolution of two dimension functions.
pub fn convolve(
    a: &BTreeMap<Bidegree, usize>,
    b: &BTreeMap<Bidegree, usize>,
) -> BTreeMap<Bidegree, usize> {
    let mut out = BTreeMap::new();
    for (&da, &ma) in a {
        for (&db, &mb) in b {
            *out.entry(da + db).or_insert(0) += ma * mb;
        }
    }
    out
}

/// Checks `H(M/τ ⊗ N/τ; x) ≅ H(M/τ; x) ⊗ H(N/τ; x)` on dimensions for all
/// three differentials, computing the left side from `M ⊗ N`.
pub fn kunneth_verify(m: &A1Module, n: &A1Module) -> Result<bool> {
    let product = margolis_report(&tensor(m, n)?)?;
    let hm = margolis_report(m)?;
    let hn = margolis_report(n)?;
    Ok(Differential::ALL
        .iter()
        .all(|&x| product.get(x).dims == convolve(&hm.get(x).dims, &hn.get(x).dims)))
}
