use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial degree {degree} exceeds reversal degree {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error("word content is not a partition: {0:?}")]
    NonPartitionContent(Vec<usize>),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("basis conversion {from} -> {to} is not supported")]
    NotImplementedBasisPair { from: &'static str, to: &'static str },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid partition: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("row {row} is out of range 1..={rows}")]
    InvalidRow { row: usize, rows: usize },

    #[error("filling is not Schubert compatible: {0}")]
    NotSchubertCompatible(String),

    #[error("word {0:?} is not admissible")]
    NotAdmissible(Vec<usize>),

    #[error("{inner:?} is not contained in {outer:?}")]
    NotContained { inner: Vec<usize>, outer: Vec<usize> },

    #[error("invalid arguments: {0}")]
    InvalidArguments(String),

    #[error("unsupported prime {0} (allowed: 2, 3, 5, 7)")]
    UnsupportedPrime(u32),

    #[error("({0}, {1}) is not a free pair")]
    NotFreePair(usize, usize),

    #[error("resource limit: estimated work {estimate} exceeds budget {budget}")]
    ResourceLimit { estimate: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable variant name, used in machine-readable error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DegreeTooLarge { .. } => "DegreeTooLarge",
            Error::NonPartitionContent(_) => "NonPartitionContent",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::NotImplementedBasisPair { .. } => "NotImplementedBasisPair",
            Error::InvalidInstance(_) => "InvalidInstance",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::InvalidRow { .. } => "InvalidRow",
            Error::NotSchubertCompatible(_) => "NotSchubertCompatible",
            Error::NotAdmissible(_) => "NotAdmissible",
            Error::NotContained { .. } => "NotContained",
            Error::InvalidArguments(_) => "InvalidArguments",
            Error::UnsupportedPrime(_) => "UnsupportedPrime",
            Error::NotFreePair(..) => "NotFreePair",
            Error::ResourceLimit { .. } => "ResourceLimit",
        }
    }
}
