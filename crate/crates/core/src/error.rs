use thiserror::Error;

/// Errors raised by the library.
///
/// Element-carrying variants hold the element's display form so messages stay
/// stable regardless of which semigroup instance produced them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("elements belong to different semigroup instances: {0}")]
    MixedInstance(String),

    #[error("{0} is not an element of the instance")]
    InvalidElement(String),

    #[error("non-integer value at {element}: rank {rank} does not divide {numerator}")]
    NonIntegerWitness {
        element: String,
        rank: u64,
        numerator: String,
    },

    #[error("non-integer coefficient at {element}")]
    NonIntegerCoefficient { element: String },

    #[error("no value for {0} in the window")]
    MissingValue(String),

    #[error("decomposition of {0} is infinite without a declared finite support")]
    InfiniteDecomposition(String),

    #[error("size cap exceeded: {0}")]
    CapExceeded(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
