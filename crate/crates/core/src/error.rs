use thiserror::Error;

/// Errors raised by the exact algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix has odd dimension {0}")]
    OddDimension(usize),

    #[error("matrix is not skew-symmetric")]
    NotSkew,

    #[error("columns are linearly dependent (rank {rank} < {cols})")]
    DependentColumns { rank: usize, cols: usize },

    #[error("vector does not lie in the reference span")]
    NotInSpan,

    #[error("subspaces are not complementary")]
    NotComplementary,

    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("generator {index} is not invertible")]
    SingularGenerator { index: usize },

    #[error("invalid generators: {0}")]
    InvalidGenerators(String),

    #[error("bivector has a nonzero mixed component on the splitting of element {element}")]
    MixedComponent { element: usize },

    #[error("pair ({g}, {h}) is not transverse-shared")]
    NotTransverse { g: usize, h: usize },

    #[error("action is not symplectic")]
    NotSymplectic,

    #[error("symplectic form is invalid: {0}")]
    InvalidForm(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("scalar parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
