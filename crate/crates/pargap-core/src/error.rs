use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: legal ranks are {legal}")]
    InvalidRank {
        family: char,
        rank: usize,
        legal: &'static str,
    },

    #[error("node index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight {0:?} is not in the root lattice")]
    NotInRootLattice(Vec<i64>),

    #[error("invalid parabolic: {0}")]
    InvalidParabolic(String),

    #[error("{0}")]
    Usage(String),

    #[error("zero curvature has full annihilator; query rejected")]
    ZeroCurvature,

    #[error("empty spectra")]
    EmptySpectra,

    #[error("verification mismatch: {0}")]
    Verification(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
