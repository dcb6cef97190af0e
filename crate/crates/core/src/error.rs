use thiserror::Error;

use crate::sequence::DegreeSequence;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative degree {value} at index {index}")]
    NegativeDegree { index: usize, value: i64 },

    #[error("sequence is empty")]
    EmptySequence,

    #[error("degree {degree} exceeds order {order} minus one")]
    DegreeExceedsOrder { degree: u64, order: usize },

    #[error("degree sum does not fit in 64 bits")]
    SumOverflow,

    #[error("invalid statistics (a1={alpha1}, an={alphan}, n={n}, s={s}): {why}")]
    InvalidStats {
        alpha1: u64,
        alphan: u64,
        n: u64,
        s: u64,
        why: &'static str,
    },

    #[error("sequence is regular (a1 = an = {0}); no threshold majorant")]
    RegularSequence(u64),

    #[error("no sequence attains a1={alpha1}, an={alphan}, n={n}, s={s}")]
    InfeasibleStats {
        alpha1: u64,
        alphan: u64,
        n: u64,
        s: u64,
    },

    #[error("sharpness family needs alpha1 >= 3, got {0}")]
    ParameterTooSmall(u64),

    #[error("exhaustive limit is n <= {limit}, requested {requested}")]
    ExhaustiveLimit { limit: usize, requested: usize },

    #[error("oracle disagreement on {sequence}: {detail}")]
    OracleDisagreement {
        sequence: DegreeSequence,
        detail: String,
    },
}
