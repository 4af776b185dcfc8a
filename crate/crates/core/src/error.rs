use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid cycle form: {0}")]
    InvalidCycleForm(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid word: entries must be distinct positive integers")]
    InvalidWord,

    #[error("permutation is not cyclic: it has {cycles} cycles")]
    NotCyclic { cycles: usize },

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("n = {n} exceeds the oracle cap of {cap}")]
    ResourceLimit { n: usize, cap: usize },

    #[error("argument outside the supported domain: {0}")]
    Domain(String),

    #[error("division by the zero series")]
    DivisionByZero,

    #[error("denominator has zero constant term; no power series at z = 0")]
    NonExpandable,

    #[error("coefficient of z^{index} is not an integer")]
    NonIntegralCoefficient { index: usize },

    #[error("input not in the map's domain: {0}")]
    NotInDomain(String),

    #[error("parse error: {0}")]
    Parse(String),
}
