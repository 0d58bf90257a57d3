use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid Grassmannian shape n={n}, k={k}: need n >= 2 and 1 <= k <= n-1")]
    InvalidShape { n: i64, k: i64 },

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<i64>, reason: String },

    #[error("special class index {index} outside [0, {k}]")]
    SpecialIndex { index: i64, k: u32 },

    #[error("integer overflow in exact coefficient arithmetic")]
    Overflow,

    #[error("Gromov-Witten invariants need at least two insertions, got {0}")]
    TooFewInsertions(usize),

    #[error("polynomial contains q but was evaluated in the classical ring")]
    QInClassical,

    #[error("residue sum {re} + {im}i is not within {tolerance} of an integer")]
    Residual { re: f64, im: f64, tolerance: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
