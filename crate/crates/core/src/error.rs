use thiserror::Error;

use crate::{Partition, Rat};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid skew shape: {inner} is not contained in {outer}")]
    InvalidSkewShape { outer: Partition, inner: Partition },

    #[error("invalid character key: shape {shape} has weight {}, class {class} has weight {}", .shape.weight(), .class.weight())]
    WeightMismatch { shape: Partition, class: Partition },

    #[error("size {size} exceeds the cap of {cap} for {context}")]
    CapExceeded {
        context: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("{context} produced the non-integral value {value}")]
    NonIntegral { context: &'static str, value: Rat },

    #[error("the transposition class is undefined for weight {0} < 2")]
    ClassUndefined(usize),

    #[error("{context}: the two evaluations disagree ({left} != {right})")]
    Mismatch {
        context: &'static str,
        left: String,
        right: String,
    },

    #[error("invalid limit specification: {0}")]
    InvalidLimitSpec(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// True for failures that indicate an internal arithmetic defect rather
    /// than bad input.
    pub fn is_integrality_violation(&self) -> bool {
        matches!(self, Error::NonIntegral { .. } | Error::Mismatch { .. })
    }
}
