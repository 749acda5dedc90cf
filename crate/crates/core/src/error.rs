use thiserror::Error;

use crate::face::Label;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex label {0}: labels must be >= 1")]
    InvalidLabel(u64),
    #[error("complex has {0} distinct vertices, at most 64 are supported")]
    TooManyVertices(usize),
    #[error("dimension {requested} out of range (complex dimension {dim:?})")]
    OutOfRange { requested: i32, dim: Option<i32> },
    #[error("operation undefined on the empty complex")]
    EmptyComplex,
    #[error("face {0:?} is not in the complex")]
    FaceNotInComplex(Vec<Label>),
    #[error("vertex {0} is not in the complex")]
    VertexNotInComplex(Label),
    #[error("faces of different sizes: {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("complex is not pure")]
    NotPure,
    #[error("complex is not extremal")]
    NotExtremal,
    #[error("complex has {found} facets, limit is {limit}")]
    LimitExceeded { found: usize, limit: usize },
    #[error("complex has at least {found} faces, budget is {budget}")]
    BudgetExceeded { found: usize, budget: usize },
    #[error("extremal split at vertex {vertex} produced a non-extremal {part}")]
    ExtremalInvariant { vertex: Label, part: &'static str },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
