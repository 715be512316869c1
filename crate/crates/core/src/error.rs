use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sequence must contain at least one element")]
    EmptySequence,
    #[error("element {value} at index {index} is not +1 or -1")]
    InvalidChip { index: usize, value: i64 },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("sequences do not form a Golay complementary pair")]
    NotGolayPair,
    #[error("at least 2 pulses are required, got {0}")]
    TooFewPulses(usize),
    #[error(
        "empty null space: the {rows}x{cols} design matrix has full column rank \
         ({rows} grid angles >= {cols} pulses); reduce M or increase N"
    )]
    EmptyNullSpace { rows: usize, cols: usize },
    #[error("vector is identically zero")]
    ZeroVector,
    #[error("ambiguity map is identically zero")]
    ZeroMap,
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter {
        name: &'static str,
        reason: &'static str,
    },
    #[error("index out of range: {what} = {index}")]
    OutOfRange { what: &'static str, index: i64 },
}
