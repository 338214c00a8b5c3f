use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("unknown Dynkin family {0:?} (expected A, D or E)")]
    UnknownFamily(String),

    #[error("orientation has {got} entries but the diagram has {expected} edges")]
    OrientationLength { expected: usize, got: usize },

    #[error("invalid orientation character {0:?} (expected 'f' or 'b')")]
    OrientationChar(char),

    #[error("vector length {got} does not match quiver with {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("type {0} has no branch vertex")]
    NoBranchVertex(String),

    #[error("vertex {0} is neither a sink nor a source")]
    NotSinkOrSource(usize),

    #[error("representations live on different quivers")]
    QuiverMismatch,

    #[error("representation is decomposable (endomorphism dimension {0})")]
    Decomposable(usize),

    #[error("not cluster-tilting: {0}")]
    NotClusterTilting(String),

    #[error("not a tilting module: {0}")]
    NotTiltingModule(String),

    #[error("label {0:?} could not be parsed")]
    BadLabel(String),

    #[error("label {0} is not an object of this cluster category")]
    UnknownLabel(String),

    #[error("no module-only normalization found for {0}")]
    NormalizationFailed(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("cache error: {0}")]
    Cache(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Consistency(_) | Error::NormalizationFailed(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! ensure_consistent {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err($crate::error::Error::Consistency(format!($($arg)*)));
        }
    };
}
pub(crate) use ensure_consistent;
