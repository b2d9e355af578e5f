use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type {0:?}")]
    InvalidCartanType(String),
    #[error("rank {rank} exceeds the configured cap {cap}")]
    RankTooLarge { rank: usize, cap: usize },
    #[error("Weyl group order exceeds the configured cap {cap}")]
    GroupTooLarge { cap: usize },
    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error("not a root of the system: {0:?}")]
    NotARoot(Vec<i64>),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("weight {0:?} is not of classical type")]
    NotClassicalType(Vec<i64>),
    #[error("weight {0:?} is not a character of the parabolic subgroup")]
    NotCharacterOfParabolic(Vec<i64>),
    #[error("parabolic {parabolic:?} is smaller than the common stabilizer {stabilizer:?} of the weights")]
    NotAmple {
        parabolic: Vec<usize>,
        stabilizer: Vec<usize>,
    },
    #[error("element {0} is not a minimal coset representative")]
    NotInQuotient(String),
    #[error("({0}, {1}) is not a covering pair")]
    NotCoveringPair(String, String),
    #[error("invalid Richardson pair: {0} is not below {1}")]
    InvalidPair(String, String),
    #[error("word is not reduced: {0:?}")]
    NonReducedWord(Vec<usize>),
    #[error("simple root index {0} out of range")]
    BadSimpleIndex(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("pair is already standard, nothing to straighten")]
    AlreadyStandard,
    #[error("linear system has no unique solution: {0}")]
    SingularSystem(String),
    #[error("invalid field prime {0}")]
    BadPrime(u64),
    #[error("degenerate sample after {0} attempts")]
    DegenerateSample(usize),
    #[error("operation requires type A, got {0}")]
    NotTypeA(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
