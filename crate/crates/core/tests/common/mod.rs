#![allow(dead_code)]

use std::collections::BTreeSet;

use a1pic::linalg::expand_bidegree;
use a1pic::{
    catalog, direct_sum, dual, loop_module, suspend, tensor, A1Module, Bidegree, F2A1Module,
    MonomialMap,
};
use proptest::prelude::*;

/// Rank over F2 of dense rows, by plain elimination.
pub fn dense_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col]) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] {
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The F2 matrix of `f` from the `(s, w)` part of its source to the
/// `(s, w) + deg f` part of its target, one row per source element.
pub fn expanded_matrix(f: &MonomialMap, at: Bidegree) -> Vec<Vec<bool>> {
    let src = expand_bidegree(f.source(), at);
    let tgt = expand_bidegree(f.target(), at + f.degree());
    src.iter()
        .map(|e| {
            let mut row = vec![false; tgt.len()];
            for &j in f.row(e.generator) {
                let power = e.tau_power + f.valuation(e.generator, j);
                let k = tgt
                    .iter()
                    .position(|t| t.generator == j && t.tau_power == power)
                    .expect("image lies in the target bidegree");
                row[k] ^= true;
            }
            row
        })
        .collect()
}

/// Bidegrees large enough to see every expanded piece of `f` stabilise.
pub fn window(f: &MonomialMap) -> Vec<Bidegree> {
    let all: Vec<Bidegree> = f
        .source()
        .generators()
        .iter()
        .chain(f.target().generators())
        .map(|g| g.degree)
        .collect();
    let (smin, smax, wmin, wmax) = all.iter().fold((0, 0, 0, 0), |(a, b, c, d), g| {
        (a.min(g.s), b.max(g.s), c.min(g.w), d.max(g.w))
    });
    let reach = f.degree().s.abs() + 1;
    let lift = f.degree().w.abs() + 2;
    let mut out = Vec::new();
    for s in smin - reach..=smax + reach {
        for w in wmin - 1..=wmax + lift {
            out.push(Bidegree::new(s, w));
        }
    }
    out
}

/// The τ = 0 differential for `x ∈ {Q0, Q1, Sq2}` as dense rows.
fn differential_rows(mt: &F2A1Module, name: &str) -> (Bidegree, Vec<BTreeSet<usize>>) {
    let n = mt.dim();
    let apply = |f: &a1pic::F2Map, v: &BTreeSet<usize>| {
        let mut out = BTreeSet::new();
        for &i in v {
            for &j in f.row(i) {
                if !out.insert(j) {
                    out.remove(&j);
                }
            }
        }
        out
    };
    let rows = (0..n)
        .map(|i| {
            let e = BTreeSet::from([i]);
            match name {
                "Q0" => apply(&mt.sq1, &e),
                "Sq2" => apply(&mt.sq2, &e),
                "Q1" => {
                    let a = apply(&mt.sq2, &apply(&mt.sq1, &e));
                    let b = apply(&mt.sq1, &apply(&mt.sq2, &e));
                    a.symmetric_difference(&b).copied().collect()
                }
                _ => unreachable!(),
            }
        })
        .collect();
    let degree = match name {
        "Q0" => Bidegree::SQ1,
        "Q1" => Bidegree::new(3, 1),
        _ => Bidegree::SQ2,
    };
    (degree, rows)
}

/// Homology dimension at each bidegree, by enumerating every vector of
/// each bidegree piece and counting cycles and boundaries.
pub fn enumerated_homology(
    mt: &F2A1Module,
    name: &str,
) -> std::collections::BTreeMap<Bidegree, usize> {
    let (degree, rows) = differential_rows(mt, name);
    let piece = |b: Bidegree| -> Vec<usize> {
        (0..mt.dim()).filter(|&i| mt.basis.degree(i) == b).collect()
    };
    let image = |idx: &[usize], mask: u64| -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for (bit, &i) in idx.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                for &j in &rows[i] {
                    if !out.insert(j) {
                        out.remove(&j);
                    }
                }
            }
        }
        out
    };
    let degrees: BTreeSet<Bidegree> = mt.basis.generators().iter().map(|g| g.degree).collect();
    let mut out = std::collections::BTreeMap::new();
    for b in degrees {
        let here = piece(b);
        let below = piece(b - degree);
        assert!(
            here.len() <= 16 && below.len() <= 16,
            "piece too large to enumerate"
        );
        let cycles = (0..1u64 << here.len())
            .filter(|&m| image(&here, m).is_empty())
            .count();
        let boundaries: BTreeSet<Vec<usize>> = (0..1u64 << below.len())
            .map(|m| image(&below, m).into_iter().collect())
            .collect();
        let ratio = cycles / boundaries.len();
        assert_eq!(ratio * boundaries.len(), cycles);
        let dim = ratio.trailing_zeros() as usize;
        if dim > 0 {
            out.insert(b, dim);
        }
    }
    out
}

/// A module built from catalog entries by the structural functors.
#[derive(Clone, Debug)]
pub enum Expr {
    Leaf(&'static str),
    Loop,
    Suspend(i32, i32, Box<Expr>),
    Dual(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn eval(&self) -> A1Module {
        match self {
            Expr::Leaf(name) => catalog::builtin(name).unwrap(),
            Expr::Loop => loop_module(&catalog::unit()).unwrap(),
            Expr::Suspend(a, b, e) => suspend(&e.eval(), *a, *b),
            Expr::Dual(e) => dual(&e.eval()),
            Expr::Sum(a, b) => direct_sum(&[&a.eval(), &b.eval()]),
            Expr::Tensor(a, b) => tensor(&a.eval(), &b.eval()).unwrap(),
        }
    }

    /// Rank without building the module.
    pub fn rank(&self) -> usize {
        match self {
            Expr::Leaf(name) => catalog::builtin(name).unwrap().rank(),
            Expr::Loop => 7,
            Expr::Suspend(_, _, e) | Expr::Dual(e) => e.rank(),
            Expr::Sum(a, b) => a.rank() + b.rank(),
            Expr::Tensor(a, b) => a.rank() * b.rank(),
        }
    }
}

fn tree(leaves: BoxedStrategy<Expr>, with_sums: bool) -> impl Strategy<Value = Expr> {
    leaves.prop_recursive(3, 12, 2, move |inner| {
        let mut ops = vec![
            (-3i32..=3, -2i32..=2, inner.clone())
                .prop_map(|(a, b, e)| Expr::Suspend(a, b, Box::new(e)))
                .boxed(),
            inner.clone().prop_map(|e| Expr::Dual(Box::new(e))).boxed(),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Expr::Tensor(Box::new(a), Box::new(b)))
                .boxed(),
        ];
        if with_sums {
            ops.push(
                (inner.clone(), inner)
                    .prop_map(|(a, b)| Expr::Sum(Box::new(a), Box::new(b)))
                    .boxed(),
            );
        }
        proptest::strategy::Union::new(ops)
    })
}

/// Arbitrary modules of rank at most `cap`.
pub fn any_module(cap: usize) -> impl Strategy<Value = Expr> {
    let leaves = prop_oneof![
        Just(Expr::Leaf("M2")),
        Just(Expr::Leaf("A1")),
        Just(Expr::Leaf("A1tilde")),
        Just(Expr::Leaf("J")),
        Just(Expr::Loop),
    ]
    .boxed();
    tree(leaves, true).prop_filter("rank cap", move |e| e.rank() <= cap)
}

/// Modules built from invertible leaves by `Σ`, `D` and `⊗`.
pub fn invertible_module(cap: usize) -> impl Strategy<Value = Expr> {
    let leaves = prop_oneof![
        Just(Expr::Leaf("M2")),
        Just(Expr::Leaf("J")),
        Just(Expr::Loop)
    ]
    .boxed();
    tree(leaves, false).prop_filter("rank cap", move |e| e.rank() <= cap)
}

/// Words in `Sq1`, `Sq2` (as `1`, `2`) reduced to the admissible basis of
/// `A(1)` by the defining relations, returned with their power of τ.
pub fn normalize(word: &[u8]) -> Option<(Vec<u8>, u32)> {
    let mut w = word.to_vec();
    let mut tau = 0;
    loop {
        if w.windows(2).any(|p| p == [1, 1]) {
            return None;
        }
        if let Some(k) = w.windows(2).position(|p| p == [2, 2]) {
            w.splice(k..k + 2, [1, 2, 1]);
            tau += 1;
            continue;
        }
        if let Some(k) = w.windows(4).position(|p| p == [2, 1, 2, 1]) {
            w.splice(k..k + 4, [1, 2, 1, 2]);
            continue;
        }
        assert!(w.len() <= 4);
        return Some((w, tau));
    }
}

/// The eight admissible words.
pub fn admissible_words() -> Vec<Vec<u8>> {
    vec![
        vec![],
        vec![1],
        vec![2],
        vec![1, 2],
        vec![2, 1],
        vec![1, 2, 1],
        vec![2, 1, 2],
        vec![1, 2, 1, 2],
    ]
}

pub fn word_degree(word: &[u8]) -> Bidegree {
    word.iter().fold(Bidegree::ZERO, |acc, &c| {
        acc + if c == 1 { Bidegree::SQ1 } else { Bidegree::SQ2 }
    })
}
