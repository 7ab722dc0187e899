//! `A(1)`-modules that are free over `M2`, their maps, and the functors
//! `Σ`, `⊗`, `D`, `−/τ`.

pub mod a1;
pub mod catalog;
pub mod format;
pub mod functors;

pub use a1::{
    word_degree, word_name, A1Module, CommutationFailure, F2A1Module, ModuleMap, Relation, Square,
    Violation, A1_WORDS,
};
pub use catalog::{builtin, BUILTIN_NAMES};
pub use format::{canonicalize, parse_module, serialize_module};
pub use functors::{direct_sum, dual, dual_id, quotient_tau, suspend, tensor, tensor_f2};
