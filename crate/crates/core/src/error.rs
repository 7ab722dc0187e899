use thiserror::Error;

use crate::margolis::Differential;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate generator id `{0}`")]
    DuplicateGenerator(String),

    #[error("ill-graded entry {source_id} -> {target}: {detail}")]
    DegreeConstraint {
        source_id: String,
        target: String,
        detail: String,
    },

    #[error("cannot compose: target basis of the inner map differs from the source basis of the outer map")]
    CompositionMismatch,

    #[error("maps do not share source, target and degree")]
    ShapeMismatch,

    #[error("image of generator `{0}` leaves the span of the inclusion")]
    MembershipFailure(String),

    #[error("{0} does not square to zero")]
    SquareNotZero(Differential),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown builtin module `{0}` (expected M2, A1, A1tilde or J)")]
    UnknownBuiltin(String),

    #[error("module `{name}` fails validation: {summary}")]
    InvalidModule { name: String, summary: String },

    #[error("module is not invertible")]
    NotInvertible,

    #[error("signature {0} has no integer solution over the generator lattice")]
    LatticeInconsistency(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
