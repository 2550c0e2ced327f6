use thiserror::Error;

use crate::algebra::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient rings differ: {0} vs {1}")]
    RingMismatch(Ring, Ring),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of an empty or all-zero list")]
    EmptyGcd,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("generator index {index} out of range (have {count})")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("cannot parse polynomial {text:?}: {reason}")]
    PolyParse { text: String, reason: String },
    #[error("unknown generator name {0:?}")]
    UnknownGenerator(String),
    #[error("cannot parse word {text:?}: {reason}")]
    WordParse { text: String, reason: String },
    #[error("empty PD code")]
    EmptyPd,
    #[error("malformed PD code near {0:?}")]
    PdSyntax(String),
    #[error("arc label {label} appears {count} time(s); every label must appear exactly twice")]
    PdMultiplicity { label: usize, count: usize },
    #[error("PD code describes a link with more than one component")]
    PdMultiComponent,
    #[error("unknown knot {name:?}; available: {available}")]
    UnknownKnot { name: String, available: String },
    #[error("line {line}: {reason}")]
    FileFormat { line: usize, reason: String },
    #[error("representation has {got} images, presentation has {expected} generators")]
    RepArity { got: usize, expected: usize },
    #[error("det Phi(x_{column} - 1) vanishes; choose another column")]
    DegenerateColumn { column: usize },
    #[error("homomorphism has {got} images for {expected} source generators")]
    HomArity { got: usize, expected: usize },
    #[error("homomorphism is not verified: {0}")]
    Unverified(String),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
