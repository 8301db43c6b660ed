use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Sign-change isolation did not find the number of roots the family
    /// formula promises.
    #[error("expected {expected} roots in [{lo}, {hi}], isolated {found}")]
    CountMismatch {
        expected: usize,
        found: usize,
        lo: f64,
        hi: f64,
    },

    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("weight denominator vanishes at node {node}")]
    DegenerateWeight { node: f64 },

    #[error("basis index {index} out of range (basis size {size})")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("{id}: rule has {actual} entries, golden table has {expected}")]
    EntryCountMismatch {
        id: String,
        expected: usize,
        actual: usize,
    },

    #[error("golden data: {0}")]
    Golden(String),
}
