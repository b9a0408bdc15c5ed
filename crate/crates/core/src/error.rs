use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {family}{rank}: {reason}")]
    UnsupportedRootSystem {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("Weyl group has {order} elements, which exceeds the cap of {cap}")]
    CapExceeded { cap: usize, order: u128 },

    #[error("lattice choice {choice} is invalid for {system}")]
    InvalidLatticeChoice { choice: String, system: String },

    #[error("invalid group label: {0}")]
    InvalidGroupLabel(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("combinatorial guard exceeded: r = {r} > {max}")]
    GuardExceeded { r: usize, max: usize },

    #[error("J-tuple {tuple:?} is out of bounds for caps {caps:?}")]
    OutOfBounds { tuple: Vec<u32>, caps: Vec<u32> },

    #[error("inconsistent profile: {0}")]
    InconsistentProfile(String),

    #[error("undocumented case: {0}")]
    Undocumented(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
