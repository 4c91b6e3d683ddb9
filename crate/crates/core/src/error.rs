use crate::Natural;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("the empty partition has no canonical form")]
    EmptyPartition,

    #[error("indices {0:?} do not form a 2-partition")]
    NotTwoPartition(Vec<usize>),

    #[error("0 has no continued-fraction vector")]
    ZeroFraction,

    #[error("partial quotient of {0} does not fit in 64 bits")]
    QuotientOverflow(String),

    #[error("vector {0:?} is not a valid leading component (a_1 >= 1, later entries >= 2)")]
    NotInA1(Vec<u64>),

    #[error("vector {0:?} has an entry below 2")]
    NotInA2(Vec<u64>),

    #[error("omega is undefined at 0")]
    OmegaUndefined,

    #[error("tau is undefined at {0}: it lies on the orbit of 0 (F = 1)")]
    TauUndefined(Natural),

    #[error("{0} is not an essential number")]
    NotEssential(Natural),

    #[error("k must be at least 1")]
    ZeroK,

    #[error("n = {n} exceeds the oracle bound {bound}")]
    OracleBound { n: u64, bound: u64 },

    #[error("invalid range: lo = {lo} must be below hi = {hi}")]
    InvalidRange { lo: u64, hi: u64 },

    #[error("hull prediction needs r >= 7, got {0}")]
    HullIndex(usize),

    #[error("cannot parse {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("letter {letter}: {reason}")]
    BadLetter {
        letter: String,
        reason: &'static str,
    },
}
