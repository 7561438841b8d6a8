use thiserror::Error;

use crate::scalar::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),

    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),

    #[error("unknown Coxeter type {0:?}")]
    UnknownType(String),

    #[error("unknown generator label {0:?}")]
    UnknownLabel(String),

    #[error("infinite parabolic subgroup {0}")]
    InfiniteParabolic(String),

    #[error("infinite group: {0}")]
    InfiniteGroup(String),

    #[error("conjugate of {0} is not a simple reflection")]
    NotSimpleReflection(String),

    #[error("{0} is not a generator of the cactus group")]
    NotAGenerator(String),

    #[error("relation not applicable at position {position}: {reason}")]
    RelationNotApplicable { position: usize, reason: String },

    #[error("cannot parse cactus word: {0}")]
    WordSyntax(String),

    #[error("not a type A system: {0}")]
    NotTypeA(String),

    #[error("interval out of range: {0}")]
    OutOfRange(String),

    #[error("invalid generator family: {0}")]
    InvalidFamily(String),

    #[error("degenerate form at t = {t}: {subspace}")]
    DegenerateForm { t: String, subspace: String },

    #[error("subspace not invariant under generator {0}")]
    SubspaceNotInvariant(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
