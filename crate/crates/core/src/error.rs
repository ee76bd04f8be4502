use thiserror::Error;

/// Errors raised by the reasoning core and the input front end.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("leading monomial of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("operation requires a reduced (Z, P) pair")]
    NotReduced,

    #[error("polynomial `{0}` is not linear over the lattice variables")]
    NotLinear(String),

    #[error("variable sets are not disjoint")]
    VariablesNotDisjoint,

    #[error("Int atoms are not part of LRR; use the LIRR theory")]
    IntAtomInLrr,

    #[error("quantified formulas are not supported")]
    Quantifier,

    #[error("integer hull enumeration exceeds {0} candidate points")]
    HullTooLarge(u64),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
