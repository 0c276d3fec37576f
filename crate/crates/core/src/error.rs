use thiserror::Error;

use crate::diffpoly::Indeterminate;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("operation requires a nonconstant polynomial")]
    ConstantPolynomial,

    #[error("derivation index {index} out of range 1..={max}")]
    DerivationOutOfRange { index: usize, max: usize },

    #[error("variable index {index} out of range 1..={max}")]
    VariableOutOfRange { index: usize, max: usize },

    #[error("unknown group element `{0}`")]
    UnknownGroupElement(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("no value assigned to {0:?}")]
    MissingAssignment(Indeterminate),

    #[error("indeterminate {0:?} is not part of the truncation")]
    OutsideTruncation(Indeterminate),

    #[error("truncations differ")]
    TruncationMismatch,

    #[error("cannot saturate by the zero polynomial")]
    ZeroSaturator,

    #[error("not autoreduced: {0}")]
    NotAutoreduced(crate::reduction::Violation),

    #[error("no nonconstant polynomial in the input")]
    AllConstant,

    #[error("polynomial mentions block `{0}` outside the first block")]
    ForeignBlock(String),

    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
