use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("relation is not length-homogeneous and admissible: {0}")]
    NonHomogeneous(String),
    #[error("path basis still nonzero at length {0}; the relations do not look admissible")]
    LengthCap(usize),
    #[error("unsupported ideal shape: {0}")]
    UnsupportedIdeal(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("module is not tau-rigid")]
    NotTauRigid,
    #[error("pair is not basic: {0}")]
    NotBasic(String),
    #[error("{0}")]
    InvalidPair(String),
    #[error("exchange graph is incomplete")]
    IncompleteGraph,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
