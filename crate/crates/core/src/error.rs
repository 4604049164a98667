use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("rank {n} exceeds the enumeration cap {cap}")]
    RankCapExceeded { n: usize, cap: usize },
    #[error("duplicate entries")]
    DuplicateEntries,
    #[error("parameter k is required for this variant")]
    MissingParameterK,
    #[error("step {k} out of range for rank {n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("vector is not the augmented non-inversion zone-crossing vector of any permutation")]
    NotARealizableVector,
    #[error("k = {k} exceeds n = {n}")]
    KExceedsN { k: usize, n: usize },
    #[error("inexact division by {divisor} while applying the differential operator")]
    InexactDivision { divisor: u64 },
    #[error("parameters outside the regime of the formula: {0}")]
    OutOfRegime(String),
    #[error("rank {n} too small (need at least {min})")]
    RankTooSmall { n: usize, min: usize },
    #[error("{0} is not achievable as a dot product with the identity")]
    NotAchievable(u64),
    #[error("m = {m} out of range for rank {n}")]
    MOutOfRange { m: u64, n: usize },
    #[error("{0} is outside the table")]
    OutOfTable(u64),
    #[error("unknown pattern: {0}")]
    UnknownPattern(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("invalid statistic: {0}")]
    InvalidStatistic(String),
    #[error("no {method} method for {what}")]
    MethodUnavailable { method: &'static str, what: String },
    #[error("polynomial syntax error at byte {pos}: {msg}")]
    PolySyntax { pos: usize, msg: String },
    #[error("polynomial degree exceeds {0}")]
    DegreeTooLarge(usize),
    #[error("malformed polynomial json: {0}")]
    PolyJson(String),
    #[error("cross-check failed: {0}")]
    Mismatch(String),
}
