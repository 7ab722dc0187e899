//! Exact computation in the stable module category of C-motivic `A(1)`.
//!
//! Modules are free over `M2 = F2[τ]` and given by a graded basis together
//! with `Sq1` and `Sq2` actions whose entries are τ-monomials. On top of the
//! graded linear algebra the crate provides the functors `Σ`, `⊗`, `D`,
//! `−/τ` and `Ω`, Margolis homology for `Q0`, `Q1`, `Sq2`, and the Picard
//! coordinates `(a, b, c, d)` of an invertible module.
//!
//! ```
//! use a1pic::{catalog, picard_coordinates, PicardCoordinates};
//!
//! let j = catalog::joker();
//! assert_eq!(picard_coordinates(&j).unwrap(), PicardCoordinates::new(0, 0, 0, 1));
//! ```

pub mod bidegree;
pub mod checks;
pub mod error;
pub mod linalg;
pub mod margolis;
pub mod module;
pub mod picard;
pub mod stable;

pub use bidegree::Bidegree;
pub use error::{Error, Result};
pub use linalg::{F2Map, Generator, GradedBasis, MonomialMap};
pub use margolis::{
    homology, is_invertible, is_projective, kunneth_verify, map_is_stable_equivalence,
    margolis_report, verify_d8_presentation, Differential, Homology, MargolisReport, Signature,
};
pub use module::{
    builtin, catalog, direct_sum, dual, parse_module, quotient_tau, serialize_module, suspend,
    tensor, A1Module, F2A1Module, ModuleMap,
};
pub use picard::{
    generator_lattice, is_stably_trivial, joker_power, picard_coordinates, picard_element,
    signature, GeneratorLattice, PicardCoordinates,
};
pub use stable::{evaluation_map, loop_module, loop_power, minimal_free_cover, FreeCover};
