//! Suspension, tensor product, `M2`-linear dual, direct sum and reduction
//! modulo τ.

use std::collections::BTreeMap;
use std::collections::HashSet;
use std::sync::Arc;

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::linalg::{F2Map, Generator, GradedBasis, MonomialMap};
use crate::module::a1::{A1Module, F2A1Module};

/// `Σ^{a,b} M`: every generator moved by `(a, b)`, actions unchanged.
pub fn suspend(m: &A1Module, a: i32, b: i32) -> A1Module {
    let shift = Bidegree::new(a, b);
    let basis = Arc::new(m.basis().shifted(shift));
    let rebase = |f: &MonomialMap| {
        f.rebase(basis.clone(), basis.clone(), f.degree())
            .expect("shifting both ends preserves valuations")
    };
    let name = if (a, b) == (0, 0) {
        m.name().to_string()
    } else {
        format!("S[{a},{b}]{}", wrap(m.name()))
    };
    A1Module::new(name, basis.clone(), rebase(m.sq1()), rebase(m.sq2())).expect("shapes agree")
}

fn wrap(s: &str) -> String {
    if s.contains(['*', '(', ')']) {
        format!("({s})")
    } else {
        s.to_string()
    }
}

fn pair_id(a: &str, b: &str) -> String {
    format!("{}*{}", wrap(a), wrap(b))
}

fn product_basis(m: &GradedBasis, n: &GradedBasis) -> Result<GradedBasis> {
    let mut gens = Vec::with_capacity(m.len() * n.len());
    for g in m.generators() {
        for h in n.generators() {
            gens.push(Generator::new(pair_id(&g.id, &h.id), g.degree + h.degree));
        }
    }
    GradedBasis::new(gens)
}

/// Accumulates `τ^k · target` terms mod 2, remembering the valuation of
/// each target.
struct Accumulator(BTreeMap<usize, (u32, bool)>);

impl Accumulator {
    fn new() -> Self {
        Self(BTreeMap::new())
    }

    fn add(&mut self, target: usize, valuation: u32) -> Result<()> {
        let slot = self.0.entry(target).or_insert((valuation, false));
        if slot.0 != valuation {
            return Err(Error::Internal(format!(
                "target {target} reached with valuations {} and {valuation}",
                slot.0
            )));
        }
        slot.1 = !slot.1;
        Ok(())
    }

    fn drain_into(self, source: usize, out: &mut Vec<(usize, usize, u32)>) {
        out.extend(
            self.0
                .into_iter()
                .filter(|(_, (_, odd))| *odd)
                .map(|(t, (k, _))| (source, t, k)),
        );
    }
}

fn checked_map(
    basis: &Arc<GradedBasis>,
    degree: Bidegree,
    entries: Vec<(usize, usize, u32)>,
) -> Result<MonomialMap> {
    let f = MonomialMap::new(
        basis.clone(),
        basis.clone(),
        degree,
        entries.iter().map(|&(i, j, _)| (i, j)),
    )?;
    for (i, j, k) in entries {
        if f.valuation(i, j) != k {
            return Err(Error::Internal(format!(
                "accumulated valuation {k} differs from forced valuation {} at {} -> {}",
                f.valuation(i, j),
                basis.id(i),
                basis.id(j)
            )));
        }
    }
    Ok(f)
}

/// `M ⊗ N` over `M2`, with `Sq1` primitive and
/// `Δ(Sq2) = Sq2⊗1 + τ Sq1⊗Sq1 + 1⊗Sq2`.
///
/// Generators are the pairs `g*h`, ordered lexicographically by
/// `(index of g, index of h)`.
pub fn tensor(m: &A1Module, n: &A1Module) -> Result<A1Module> {
    let basis = Arc::new(product_basis(m.basis(), n.basis())?);
    let nn = n.rank();
    let pair = |i: usize, j: usize| i * nn + j;

    let mut sq1_entries = Vec::new();
    let mut sq2_entries = Vec::new();
    for i in 0..m.rank() {
        for j in 0..nn {
            let p = pair(i, j);

            let mut acc = Accumulator::new();
            for &t in m.sq1().row(i) {
                acc.add(pair(t, j), m.sq1().valuation(i, t))?;
            }
            for &t in n.sq1().row(j) {
                acc.add(pair(i, t), n.sq1().valuation(j, t))?;
            }
            acc.drain_into(p, &mut sq1_entries);

            let mut acc = Accumulator::new();
            for &t in m.sq2().row(i) {
                acc.add(pair(t, j), m.sq2().valuation(i, t))?;
            }
            for &t in m.sq1().row(i) {
                for &u in n.sq1().row(j) {
                    let k = 1 + m.sq1().valuation(i, t) + n.sq1().valuation(j, u);
                    acc.add(pair(t, u), k)?;
                }
            }
            for &t in n.sq2().row(j) {
                acc.add(pair(i, t), n.sq2().valuation(j, t))?;
            }
            acc.drain_into(p, &mut sq2_entries);
        }
    }
    let sq1 = checked_map(&basis, Bidegree::SQ1, sq1_entries)?;
    let sq2 = checked_map(&basis, Bidegree::SQ2, sq2_entries)?;
    A1Module::new(pair_id(m.name(), n.name()), basis, sq1, sq2)
}

/// Id of the dual generator: toggles a leading `~`, so dualising twice
/// returns the original ids.
pub fn dual_id(id: &str) -> String {
    match id.strip_prefix('~') {
        Some(rest) => rest.to_string(),
        None => format!("~{id}"),
    }
}

fn dual_name(name: &str) -> String {
    // Only unwrap when the parenthesis after `D` closes at the very end.
    if let Some(inner) = name.strip_prefix("D(").and_then(|r| r.strip_suffix(')')) {
        let mut depth = 0i32;
        let balanced = inner.chars().all(|c| {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            depth >= 0
        });
        if balanced && depth == 0 {
            return inner.to_string();
        }
    }
    format!("D({name})")
}

/// `DM = Hom_{M2}(M, M2)`. Both antipode values are the identity on the
/// generators (`χ(Sq1) = Sq1`, `χ(Sq2) = Sq2`), so the actions are the
/// transposes; dual generators keep the primal order.
pub fn dual(m: &A1Module) -> A1Module {
    let basis = Arc::new(
        GradedBasis::new(
            m.basis()
                .generators()
                .iter()
                .map(|g| Generator::new(dual_id(&g.id), -g.degree))
                .collect(),
        )
        .expect("dual ids are distinct"),
    );
    let transpose = |f: &MonomialMap, degree| {
        MonomialMap::new(
            basis.clone(),
            basis.clone(),
            degree,
            f.entries().map(|(i, j)| (j, i)),
        )
        .expect("transposed valuations are unchanged")
    };
    A1Module::new(
        dual_name(m.name()),
        basis.clone(),
        transpose(m.sq1(), Bidegree::SQ1),
        transpose(m.sq2(), Bidegree::SQ2),
    )
    .expect("shapes agree")
}

/// `M1 ⊕ … ⊕ Mk`. Ids are kept when they are distinct across summands;
/// otherwise every id is prefixed with `s<k>.`.
pub fn direct_sum(summands: &[&A1Module]) -> A1Module {
    let mut seen = HashSet::new();
    let clash = summands
        .iter()
        .flat_map(|m| m.basis().generators())
        .any(|g| !seen.insert(g.id.as_str()));
    let mut gens = Vec::new();
    let mut offsets = Vec::new();
    for (k, m) in summands.iter().enumerate() {
        offsets.push(gens.len());
        gens.extend(m.basis().generators().iter().map(|g| {
            let id = if clash {
                format!("s{k}.{}", g.id)
            } else {
                g.id.clone()
            };
            Generator::new(id, g.degree)
        }));
    }
    let basis = Arc::new(GradedBasis::new(gens).expect("ids made distinct"));
    let collect = |pick: fn(&A1Module) -> &MonomialMap| {
        summands
            .iter()
            .zip(&offsets)
            .flat_map(|(m, &o)| {
                pick(m)
                    .entries()
                    .map(move |(i, j)| (i + o, j + o))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    };
    let sq1 = MonomialMap::new(
        basis.clone(),
        basis.clone(),
        Bidegree::SQ1,
        collect(A1Module::sq1),
    )
    .expect("summand maps are well graded");
    let sq2 = MonomialMap::new(
        basis.clone(),
        basis.clone(),
        Bidegree::SQ2,
        collect(A1Module::sq2),
    )
    .expect("summand maps are well graded");
    let name = summands
        .iter()
        .map(|m| wrap(m.name()))
        .collect::<Vec<_>>()
        .join("+");
    A1Module::new(name, basis, sq1, sq2).expect("shapes agree")
}

/// `M/τ`: entries of positive valuation are dropped.
pub fn quotient_tau(m: &A1Module) -> F2A1Module {
    F2A1Module {
        name: format!("{}/tau", wrap(m.name())),
        basis: m.basis().clone(),
        sq1: m.sq1().reduce_mod_tau(),
        sq2: m.sq2().reduce_mod_tau(),
    }
}

/// Tensor product of `A(1)/τ`-modules; both generators act as derivations.
pub fn tensor_f2(m: &F2A1Module, n: &F2A1Module) -> Result<F2A1Module> {
    let basis = Arc::new(product_basis(&m.basis, &n.basis)?);
    let nn = n.dim();
    let derivation = |fm: &F2Map, fnn: &F2Map, degree| {
        let mut entries = Vec::new();
        for i in 0..m.dim() {
            for j in 0..nn {
                let mut acc = BTreeMap::<usize, bool>::new();
                for &t in fm.row(i) {
                    *acc.entry(t * nn + j).or_default() ^= true;
                }
                for &t in fnn.row(j) {
                    *acc.entry(i * nn + t).or_default() ^= true;
                }
                entries.extend(
                    acc.into_iter()
                        .filter(|e| e.1)
                        .map(|(t, _)| (i * nn + j, t)),
                );
            }
        }
        F2Map::new(basis.clone(), basis.clone(), degree, entries)
    };
    Ok(F2A1Module {
        name: pair_id(&m.name, &n.name),
        sq1: derivation(&m.sq1, &n.sq1, Bidegree::SQ1)?,
        sq2: derivation(&m.sq2, &n.sq2, Bidegree::SQ2)?,
        basis,
    })
}
