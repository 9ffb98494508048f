use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("lattice is not a sublattice of the given superlattice")]
    NotSublattice,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("empty affine subspace")]
    EmptySubspace,

    #[error("degenerate specialization: tuple entries {0:?} are lost")]
    Degenerate(Vec<usize>),

    #[error("substitution sends denominator factor {0} to zero")]
    VanishingDenominator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
