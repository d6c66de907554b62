//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials belong to different variable sets")]
    MismatchedVariables,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("resonance indices must be positive and coprime, got {p}:-{q}")]
    BadResonance { p: u32, q: u32 },
    #[error("term index (0,0) is not allowed")]
    ZeroTermIndex,
    #[error("duplicate term index ({u},{v})")]
    DuplicateTermIndex { u: u32, v: u32 },
    #[error("operation needs numeric parameter values but `{0}` is symbolic")]
    SymbolicParameter(String),
    #[error("operation needs a symbolic family but `{0}` has a numeric value")]
    NumericParameter(String),
    #[error("scaling factor must be nonzero")]
    ZeroScale,
    #[error("truncation degree {degree} is too small, need at least {min}")]
    DegreeTooSmall { degree: u32, min: u32 },
    #[error("exponent tuple has length {got}, expected {expected}")]
    BadTupleLength { got: usize, expected: usize },
    #[error("word is not on the resonant weight ray")]
    NotResonantWord,
    #[error("family is not time-reversible")]
    NotReversible,
    #[error("elimination variables must form the leading block of the ring")]
    BadEliminationBlock,
    #[error("set is not a Groebner basis: an S-polynomial fails to reduce to zero")]
    NotGroebner,
}

pub type Result<T> = std::result::Result<T, Error>;
