use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generator degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order exceeds the bound {bound}")]
    OrderBoundExceeded { bound: usize },
    #[error("{what} exceeds the supported bound {bound}")]
    BoundExceeded { what: &'static str, bound: usize },
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("operands live over different groups")]
    GroupMismatch,
    #[error("object mismatch: {0}")]
    ObjectMismatch(&'static str),
    #[error("map is not G-equivariant: {0}")]
    NotEquivariant(String),
    #[error("invalid G-set: {0}")]
    InvalidGSet(String),
    #[error("morphism is not an endomorphism")]
    NotAnEndomorphism,
    #[error("morphism or element is not idempotent")]
    NotIdempotent,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} divides the group order {order}")]
    PrimeDividesOrder { p: u64, order: usize },
    #[error("coefficient ring {0} is not a field")]
    NotAField(String),
    #[error("input is not the character of a representation: {0}")]
    NotACharacter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("zero is not a valid diagonal entry")]
    ZeroEntry,
    #[error("operation requires {expected}, got {found}")]
    WrongField { expected: String, found: String },
    #[error("curve is singular (discriminant 0)")]
    SingularCurve,
    #[error("field of size {size} exceeds the supported bound {bound}")]
    FieldTooLarge { size: u64, bound: u64 },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("prime {p} divides the field size {l}")]
    PrimeDividesFieldSize { p: u64, l: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Parse failures are usage errors; everything else is a domain error.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
