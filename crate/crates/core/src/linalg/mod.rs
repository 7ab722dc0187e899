//! Exact graded linear algebra over `M2 = F2[τ]` for maps with monomial
//! entries.

pub mod basis;
pub mod bits;
pub mod map;
pub mod ops;

pub use basis::{expand_bidegree, ExpandedElement, Generator, GradedBasis};
pub use bits::{BitVec, Echelon};
pub use map::{F2Map, MonomialMap};
pub use ops::{generic_rank, is_surjective, kernel, restrict, Kernel};
