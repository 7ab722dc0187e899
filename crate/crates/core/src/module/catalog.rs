//! Built-in modules, stored as explicit closed bases.

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::module::a1::{word_degree, word_name, A1Module, A1_WORDS};

pub const BUILTIN_NAMES: [&str; 4] = ["M2", "A1", "A1tilde", "J"];

/// The unit `M2`: one generator in degree `(0, 0)`.
pub fn unit() -> A1Module {
    A1Module::from_edges("M2", &[("g", 0, 0)], &[], &[]).expect("catalog module")
}

/// `A(1)` acting on itself by left multiplication. Generator `k` is the
/// word [`A1_WORDS`]`[k]`.
pub fn a1() -> A1Module {
    let names: Vec<String> = A1_WORDS.iter().map(|w| word_name(w)).collect();
    let degrees: Vec<Bidegree> = A1_WORDS.iter().map(|w| word_degree(w)).collect();
    let gens: Vec<(&str, i32, i32)> = names
        .iter()
        .zip(&degrees)
        .map(|(n, d)| (n.as_str(), d.s, d.w))
        .collect();
    // Left multiplication, reduced with Sq1Sq1 = 0, Sq2Sq2 = τ Sq1Sq2Sq1
    // and the braid relation.
    let sq1 = [
        ("1", "Sq1"),
        ("Sq2", "Sq1Sq2"),
        ("Sq2Sq1", "Sq1Sq2Sq1"),
        ("Sq2Sq1Sq2", "Sq1Sq2Sq1Sq2"),
    ];
    let sq2 = [
        ("1", "Sq2"),
        ("Sq1", "Sq2Sq1"),
        ("Sq2", "Sq1Sq2Sq1"), // τ·Sq1Sq2Sq1
        ("Sq1Sq2", "Sq2Sq1Sq2"),
        ("Sq1Sq2Sq1", "Sq1Sq2Sq1Sq2"),
    ];
    A1Module::from_edges("A1", &gens, &sq1, &sq2).expect("catalog module")
}

/// `Ã(1)`: generators `x@(0,0)`, `y@(2,0)` with `Sq2 x = τy` and
/// `Sq1Sq2Sq1 x = Sq2 y`.
pub fn a1_tilde() -> A1Module {
    A1Module::from_edges(
        "A1tilde",
        &[
            ("x", 0, 0),
            ("x1", 1, 0),
            ("y", 2, 0),
            ("y1", 3, 0),
            ("x3", 3, 1),
            ("y2", 4, 1),
            ("y3", 5, 1),
            ("y4", 6, 1),
        ],
        &[("x", "x1"), ("y", "y1"), ("x3", "y2"), ("y3", "y4")],
        &[
            ("x", "y"), // τ·y
            ("x1", "x3"),
            ("y", "y2"),
            ("y1", "y3"),
            ("y2", "y4"), // τ·y4
        ],
    )
    .expect("catalog module")
}

/// The joker: `x@(0,0)`, `y@(2,0)` with `Sq2 x = τy`,
/// `Sq1Sq2Sq1 x = Sq2 y` and `Sq1 y = 0`.
pub fn joker() -> A1Module {
    A1Module::from_edges(
        "J",
        &[
            ("x", 0, 0),
            ("x1", 1, 0),
            ("y", 2, 0),
            ("z3", 3, 1),
            ("z4", 4, 1),
        ],
        &[("x", "x1"), ("z3", "z4")],
        &[("x", "y"), ("x1", "z3"), ("y", "z4")],
    )
    .expect("catalog module")
}

pub fn builtin(name: &str) -> Result<A1Module> {
    match name {
        "M2" => Ok(unit()),
        "A1" => Ok(a1()),
        "A1tilde" => Ok(a1_tilde()),
        "J" => Ok(joker()),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}
