//! The line-based `.a1mod` module definition format.
//!
//! ```text
//! module J
//! gen x 0 0
//! gen x1 1 0
//! sq1 x x1
//! sq2 x y        # τ·y, valuation forced by the degrees
//! ```
//!
//! `#` starts a comment. Generators may appear in any order; every edge
//! target contributes `τ^k·dst` with `k` forced by the degrees. Omitted
//! sources act by zero.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::linalg::{Generator, GradedBasis, MonomialMap};
use crate::module::a1::{A1Module, Square};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn valid_token(t: &str) -> bool {
    !t.is_empty() && !t.contains('#') && !t.chars().any(char::is_whitespace)
}

struct EdgeLine {
    line: usize,
    op: Square,
    source: String,
    targets: Vec<String>,
}

/// Parses a module definition. Degrees are checked; the `A(1)` relations
/// are not (use [`A1Module::validate`]).
pub fn parse_module(text: &str) -> Result<A1Module> {
    let mut name: Option<String> = None;
    let mut gens: Vec<Generator> = Vec::new();
    let mut gen_lines: Vec<usize> = Vec::new();
    let mut edges: Vec<EdgeLine> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else {
            continue;
        };
        if name.is_none() && keyword != "module" {
            return Err(parse_err(
                line,
                "the first directive must be `module <name>`",
            ));
        }
        match keyword {
            "module" => {
                if name.is_some() {
                    return Err(parse_err(line, "`module` may appear only once"));
                }
                match args {
                    [n] if valid_token(n) => name = Some(n.to_string()),
                    _ => return Err(parse_err(line, "expected `module <name>`")),
                }
            }
            "gen" => {
                let [id, s, w] = args else {
                    return Err(parse_err(line, "expected `gen <id> <s> <w>`"));
                };
                let s: i32 = s
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad internal degree `{s}`")))?;
                let w: i32 = w
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad weight `{w}`")))?;
                gens.push(Generator::new(*id, Bidegree::new(s, w)));
                gen_lines.push(line);
            }
            "sq1" | "sq2" => {
                let op = if keyword == "sq1" {
                    Square::Sq1
                } else {
                    Square::Sq2
                };
                let Some((src, dsts)) = args.split_first() else {
                    return Err(parse_err(
                        line,
                        format!("expected `{keyword} <src> <dst>...`"),
                    ));
                };
                if dsts.is_empty() {
                    return Err(parse_err(
                        line,
                        format!("`{keyword} {src}` lists no targets"),
                    ));
                }
                edges.push(EdgeLine {
                    line,
                    op,
                    source: src.to_string(),
                    targets: dsts.iter().map(|d| d.to_string()).collect(),
                });
            }
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }
    let name = name.ok_or_else(|| parse_err(1, "missing `module <name>`"))?;

    let basis = GradedBasis::new(gens).map_err(|e| match e {
        Error::DuplicateGenerator(id) => {
            let line = basis_line(&gen_lines, text, &id);
            parse_err(line, format!("duplicate generator id `{id}`"))
        }
        other => other,
    })?;
    let basis = Arc::new(basis);

    let mut entries: [BTreeSet<(usize, usize)>; 2] = [BTreeSet::new(), BTreeSet::new()];
    for e in &edges {
        let lookup = |id: &str| {
            basis
                .index_of(id)
                .ok_or_else(|| parse_err(e.line, format!("unknown generator `{id}`")))
        };
        let i = lookup(&e.source)?;
        let (slot, shift, kw) = match e.op {
            Square::Sq1 => (0, Bidegree::SQ1, "sq1"),
            Square::Sq2 => (1, Bidegree::SQ2, "sq2"),
        };
        for t in &e.targets {
            let j = lookup(t)?;
            let (ds, dt) = (basis.degree(i), basis.degree(j));
            if dt.s != ds.s + shift.s {
                return Err(parse_err(
                    e.line,
                    format!(
                        "edge `{kw} {} {t}`: target must have s = {} but has s = {}",
                        e.source,
                        ds.s + shift.s,
                        dt.s
                    ),
                ));
            }
            let k = ds.w + shift.w - dt.w;
            if k < 0 {
                return Err(parse_err(
                    e.line,
                    format!(
                        "edge `{kw} {} {t}`: forced τ-valuation {k} is negative",
                        e.source
                    ),
                ));
            }
            if !entries[slot].insert((i, j)) {
                return Err(parse_err(
                    e.line,
                    format!("edge `{kw} {} {t}` listed twice", e.source),
                ));
            }
        }
    }
    let [e1, e2] = entries;
    let sq1 = MonomialMap::new(basis.clone(), basis.clone(), Bidegree::SQ1, e1)?;
    let sq2 = MonomialMap::new(basis.clone(), basis.clone(), Bidegree::SQ2, e2)?;
    A1Module::new(name, basis, sq1, sq2)
}

fn basis_line(gen_lines: &[usize], text: &str, id: &str) -> usize {
    // The second declaration of `id` is the offending one.
    gen_lines
        .iter()
        .copied()
        .filter(|&l| {
            text.lines()
                .nth(l - 1)
                .and_then(|raw| raw.split_whitespace().nth(1))
                == Some(id)
        })
        .nth(1)
        .unwrap_or(1)
}

/// The module with its basis in canonical `(s, w, id)` order.
pub fn canonicalize(m: &A1Module) -> A1Module {
    let b = m.basis();
    let mut order: Vec<usize> = (0..b.len()).collect();
    order.sort_by(|&x, &y| {
        (b.degree(x).s, b.degree(x).w, b.id(x)).cmp(&(b.degree(y).s, b.degree(y).w, b.id(y)))
    });
    let mut position = vec![0; b.len()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let basis = Arc::new(
        GradedBasis::new(order.iter().map(|&i| b.generators()[i].clone()).collect())
            .expect("permutation keeps ids distinct"),
    );
    let permute = |f: &MonomialMap| {
        MonomialMap::new(
            basis.clone(),
            basis.clone(),
            f.degree(),
            f.entries().map(|(i, j)| (position[i], position[j])),
        )
        .expect("permutation keeps valuations")
    };
    A1Module::new(m.name(), basis.clone(), permute(m.sq1()), permute(m.sq2()))
        .expect("shapes agree")
}

/// Canonical text: generators sorted by `(s, w, id)`, one edge line per
/// source, `sq1` lines before `sq2` lines.
pub fn serialize_module(m: &A1Module) -> String {
    let c = canonicalize(m);
    let b = c.basis();
    let mut out = String::new();
    writeln!(out, "module {}", c.name()).unwrap();
    for g in b.generators() {
        writeln!(out, "gen {} {} {}", g.id, g.degree.s, g.degree.w).unwrap();
    }
    for (kw, f) in [("sq1", c.sq1()), ("sq2", c.sq2())] {
        for i in 0..b.len() {
            let row = f.row(i);
            if row.is_empty() {
                continue;
            }
            let targets: Vec<&str> = row.iter().map(|&j| b.id(j)).collect();
            writeln!(out, "{kw} {} {}", b.id(i), targets.join(" ")).unwrap();
        }
    }
    out
}
