use thiserror::Error;

/// Everything that can go wrong when building or checking an object.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for a set of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("expected {expected} table entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("not a group: {axiom} fails at {witness:?}")]
    NotAGroup { axiom: &'static str, witness: Vec<usize> },
    #[error("map is degenerate: {0}")]
    Degenerate(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("mapping is not surjective, unhit elements {0:?}")]
    NotSurjective(Vec<usize>),
    #[error("fiber over {0} is empty")]
    EmptyFiber(usize),
    #[error("search space too large: {0}")]
    TooLarge(String),
    #[error("map is not invertible")]
    NotInvertible,
    #[error("incompatible data: {relation} fails at {witness:?}")]
    Incompatible { relation: String, witness: Vec<usize> },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("element is not invertible in the algebra")]
    NotInvertibleInAlgebra,
    #[error("not a bijection: {0}")]
    NotBijective(String),
    #[error("map does not solve the {0}")]
    NotASolution(&'static str),
    #[error("unsupported presentation {0:?}")]
    UnsupportedName(String),
    #[error("bad strand count {0}")]
    BadN(usize),
    #[error("bad symbol: {0}")]
    BadSymbol(String),
    #[error("bad index: {0}")]
    BadIndex(String),
    #[error("generator {0} has no image")]
    MissingGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
