use thiserror::Error;

/// Errors raised by the group, ring and tower computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} cap exceeded: {size} > {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("map is not surjective")]
    NotSurjective,
    #[error("atom count {0} out of range 1..=20")]
    AtomsOutOfRange(usize),
    #[error("element set is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("mismatched operands: {0}")]
    Mismatch(String),
    #[error("chain is not descending at position {0}")]
    NotDescending(usize),
    #[error("{0} is not a subfield")]
    NotASubfield(String),
    #[error("unknown field {0}")]
    UnknownField(String),
    #[error("nilpotent element {witness} (nonzero, power vanishes)")]
    Nilpotent { witness: usize },
    #[error("ring is not commutative")]
    NotCommutative,
    #[error("ring has no identity")]
    NoIdentity,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("translates of v do not span V")]
    DoesNotSpan,
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("missing beta entry for rank {0}")]
    MissingBeta(u64),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
