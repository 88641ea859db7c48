use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element index {index} out of range for a poset of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("self-loop on element {0}")]
    SelfLoop(usize),
    #[error("cover relation contains a cycle")]
    Cycle,
    #[error("posets are limited to 64 elements, got {0}")]
    TooLarge(usize),
    #[error("enumeration exceeded the cap of {cap} linear extensions")]
    CapExceeded { cap: u64 },
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("invalid linear extension: {0}")]
    InvalidExtension(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("shape of odd size {0} has no domino tableaux")]
    OddSize(usize),
    #[error("partition {0} has a nonempty 2-core")]
    NonEmptyCore(String),
    #[error("cell ({0}, {1}) is not a corner")]
    NotACorner(usize, usize),
    #[error("{0} is not a hook")]
    NotAHook(String),
    #[error("q-binomial [{n} choose {k}] is out of range")]
    BinomialRange { n: i64, k: i64 },
    #[error("poset is not consistent")]
    Inconsistent,
    #[error("poset is not dual consistent")]
    NotDualConsistent,
    #[error("poset is not a forest")]
    NotForest,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("composition {parts:?} does not sum to {n}")]
    CompositionMismatch { parts: Vec<usize>, n: usize },
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("region is empty")]
    EmptyRegion,
    #[error("region is not connected")]
    NotConnected,
    #[error("region is not simply connected")]
    NotSimplyConnected,
    #[error("region has no domino tiling")]
    Untilable,
    #[error("series length {0} exceeds the supported maximum of 64")]
    SeriesTooLong(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
