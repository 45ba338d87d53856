use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entries must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<i64>),

    #[error("partition parts must be nonnegative, got {0:?}")]
    NegativePart(Vec<i64>),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("partition {partition} does not fit in the {rows} x {cols} box")]
    BoxViolation {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("bundle weight slots have ranks {delta} + {gamma}, expected total {n}")]
    SlotRankMismatch {
        delta: usize,
        gamma: usize,
        n: usize,
    },

    #[error("invalid grassmannian parameters: need 1 <= k < n, got k = {k}, n = {n}")]
    InvalidGrassmannian { k: usize, n: usize },

    #[error("flag dimensions must satisfy 1 <= k_1 < ... < k_m < n, got {ks:?} with n = {n}")]
    InvalidFlag { ks: Vec<usize>, n: usize },

    #[error("level {level} out of range 1..={levels}")]
    LevelOutOfRange { level: usize, levels: usize },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
