use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational `{0}`: expected `p/q` or `p` with q != 0")]
    MalformedRational(String),

    #[error("malformed projective point `{0}`: expected `u:v` with (u, v) != (0, 0)")]
    MalformedPoint(String),

    #[error("degenerate Moebius map: determinant is zero")]
    DegenerateMap,

    #[error("polynomial in {needed} variables evaluated at only {got} values")]
    TooFewValues { needed: usize, got: usize },

    #[error("step sequence must contain at least one step")]
    EmptySteps,

    #[error("sequence length {len} exceeds the permutation guard of {guard}")]
    GuardExceeded { len: usize, guard: usize },

    #[error("invalid scan bounds: {0}")]
    InvalidBounds(String),

    #[error("the Camacho-Sad linear model requires mu != 0")]
    ZeroMu,

    #[error("a cycle needs at least two components, got {0}")]
    CycleTooShort(usize),

    #[error("intersection matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("intersection matrix is not square")]
    NotSquare,

    #[error("invalid configuration at {field}: {reason}")]
    InvalidConfiguration { field: String, reason: String },

    #[error("configuration has {0} connected components; split it with `connected_components` first")]
    Disconnected(usize),

    #[error("configuration is empty")]
    EmptyConfiguration,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
