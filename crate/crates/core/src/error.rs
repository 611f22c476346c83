use thiserror::Error;

/// Errors raised while computing compositions and Jordan partitions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JordanError {
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("block sizes must be positive (got m = {m}, n = {n})")]
    ZeroBlock { m: String, n: String },
    #[error("expected m <= n (got m = {m}, n = {n})")]
    Unordered { m: String, n: String },
    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: String,
        bound: String,
    },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("empty composition")]
    EmptyComposition,
    #[error("composition sums to {sum}, which exceeds n = {n}")]
    CompositionTooLarge { sum: String, n: String },
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Errors raised by the GF(p) linear algebra and the brute-force oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("matrix dimension {dim} exceeds the configured bound {bound}")]
    SizeBound { dim: usize, bound: usize },
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("matrix is not nilpotent (rank sequence {0:?} stalls)")]
    NotNilpotent(Vec<usize>),
    #[error("invalid rank sequence {0:?}: {1}")]
    InvalidRanks(Vec<usize>, &'static str),
    #[error("characteristic {0} is not supported by the matrix backend")]
    UnsupportedCharacteristic(String),
    #[error(transparent)]
    Jordan(#[from] JordanError),
}

/// Errors raised when a sweep cannot be set up. Mismatches found during a
/// sweep are reported as data, not as errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("invalid sweep: {0}")]
    InvalidSpec(String),
    #[error("m = {m} exceeds p^t = {p}^{t}")]
    Hypothesis { m: u64, p: u64, t: u32 },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Jordan(#[from] JordanError),
}
