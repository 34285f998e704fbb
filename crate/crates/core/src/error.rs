use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid field modulus: {0}")]
    BadModulus(String),
    #[error("no default modulus for GF({p}^{k}); supply one explicitly")]
    NoDefaultModulus { p: u32, k: u32 },
    #[error("field too large: q = {0}")]
    FieldTooLarge(u64),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("q = {0} is not a square")]
    NotSquare(u32),
    #[error("gcd(m, q) != 1 (m = {m}, q = {q})")]
    NotCoprime { m: usize, q: u32 },
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("splitting field GF(q^{e}) is beyond the supported size")]
    SplittingFieldTooLarge { e: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("empty generator matrix")]
    EmptyMatrix,
    #[error("minimum distance of the zero code is undefined")]
    ZeroCode,
    #[error("enumeration budget exceeded ({needed} codewords needed, budget {budget}); best upper bound so far {upper_bound:?}")]
    BudgetExceeded {
        needed: u128,
        budget: u64,
        upper_bound: Option<usize>,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no code satisfying the requested property exists: {0}")]
    NoSuchCode(String),
}

pub type Result<T> = std::result::Result<T, Error>;
