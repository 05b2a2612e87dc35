use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("weight {0} is not in the root lattice")]
    NotInRootLattice(String),

    #[error("partition {partition:?} does not fit the rectangle ({rows}, {cols})")]
    DoesNotFit { partition: Vec<u32>, rows: u32, cols: u32 },

    #[error("interlacing violated at (i, j) = ({i}, {j})")]
    Interlacing { i: usize, j: usize },

    #[error("overlay partition at (i, j) = ({i}, {j}) does not fit its rectangle ({rows}, {cols})")]
    OverlayFit { i: usize, j: usize, rows: u32, cols: u32 },

    #[error("index {0} out of range")]
    OutOfRange(usize),

    #[error("sector mismatch: expected {expected}, found {found}")]
    SectorMismatch { expected: usize, found: usize },

    #[error("vector is not homogeneous")]
    NotHomogeneous,

    #[error("check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
