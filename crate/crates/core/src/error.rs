use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("generator index {index} exceeds n-1={max}")]
    GeneratorOutOfRange { index: usize, max: usize },

    #[error("braid groups need at least 1 strand, got {0}")]
    TooFewStrands(usize),

    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("{num} is not divisible by {den}")]
    NotDivisible { num: String, den: String },

    #[error("cannot symmetrize {0}")]
    NotSymmetrizable(String),

    #[error("closure has {0} components, a knot is required")]
    NotAKnot(usize),

    #[error("{0} requires an odd number of strands, got {1}")]
    EvenStrands(&'static str, usize),

    #[error("handle reduction exceeded the step limit of {0}")]
    StepLimit(usize),

    #[error("malformed input: {0}")]
    Format(String),
}

impl Error {
    /// True for failures that indicate a broken internal invariant rather
    /// than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::NotDivisible { .. } | Error::NotSymmetrizable(_))
    }
}
