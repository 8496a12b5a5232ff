use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty tuple")]
    EmptyTuple,

    #[error("tuple not primitive: gcd{entries:?} = {gcd}")]
    NotPrimitive { entries: Vec<u64>, gcd: u64 },

    #[error("invalid tuple {entries:?}: {reason}")]
    InvalidTuple { entries: Vec<u64>, reason: &'static str },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("multi-index {mu:?} is not componentwise below {lam:?}")]
    NotBelow { mu: Vec<u64>, lam: Vec<u64> },

    #[error("weight not in tuple: w[{index}] = {weight}")]
    WeightNotInTuple { index: usize, weight: u64 },

    #[error("objective table too short: index {index} but only {len} values")]
    TableTooShort { index: u64, len: usize },

    #[error("invalid objective: {0}")]
    InvalidObjective(String),

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("invalid face: {0}")]
    InvalidFace(String),

    #[error("system is not downward closed: {0} is missing")]
    NotClosed(String),

    #[error("{what} = {value} exceeds the supported limit {limit}")]
    TooLarge { what: &'static str, value: u64, limit: u64 },

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter { name: &'static str, value: u64, reason: &'static str },

    #[error("{field}: {message}")]
    Format { field: String, message: String },
}

impl Error {
    /// A short, stable category name, used by the CLI for machine-readable
    /// failures.
    pub fn category(&self) -> &'static str {
        match self {
            Error::EmptyTuple | Error::NotPrimitive { .. } | Error::InvalidTuple { .. } => "tuple",
            Error::LengthMismatch { .. } | Error::NotBelow { .. } => "dimension",
            Error::WeightNotInTuple { .. } => "weights",
            Error::TableTooShort { .. } | Error::InvalidObjective(_) => "objective",
            Error::InvalidPoint(_) | Error::InvalidFace(_) | Error::NotClosed(_) => "system",
            Error::TooLarge { .. } => "limit",
            Error::InvalidParameter { .. } => "parameter",
            Error::Format { .. } => "format",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
