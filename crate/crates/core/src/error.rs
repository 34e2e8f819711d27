use thiserror::Error;

/// Failures of the exact group computations.
///
/// Partial maps that are merely undefined at a point do not produce an
/// error; they return `None`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not in the big Gauss cell (a leading principal minor vanishes)")]
    NotInBigCell,
    #[error("matrix is not in U^-U (leading principal minors are not all 1)")]
    NotInCellU,
    #[error("zero argument at position {0}")]
    ZeroArgument(usize),
    #[error("determinant is {0}, expected 1")]
    NotUnimodular(String),
    #[error("not a torus element: {0}")]
    NotInTorus(String),
    #[error("not a monomial matrix")]
    NotMonomial,
    #[error("not a monomial matrix of determinant 1")]
    NotWeylLift,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid dimension {0}: matrices must be at least 2x2")]
    InvalidDimension(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("n1 * u1 * n2 does not lie in U^-U")]
    NotInCell,
    #[error("not a pair of regular semisimple elements in the given classes: {0}")]
    NotSemisimplePair(String),
    #[error("torus parameter is central (+1 or -1)")]
    CentralTorus,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name used in JSON error objects.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotInBigCell => "NotInBigCell",
            Error::NotInCellU => "NotInCellU",
            Error::ZeroArgument(_) => "ZeroArgument",
            Error::NotUnimodular(_) => "NotUnimodular",
            Error::NotInTorus(_) => "NotInTorus",
            Error::NotMonomial => "NotMonomial",
            Error::NotWeylLift => "NotWeylLift",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::InvalidDimension(_) => "InvalidDimension",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotInCell => "NotInCell",
            Error::NotSemisimplePair(_) => "NotSemisimplePair",
            Error::CentralTorus => "CentralTorus",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
