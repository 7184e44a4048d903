use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty block")]
    EmptyBlock,
    #[error("index {0} occurs more than once")]
    DuplicateIndex(u32),
    #[error("index {index} is outside the universe {{1..{n}}}")]
    IndexOutOfRange { index: u32, n: u32 },
    #[error("universe of size {sub} is not contained in universe of size {sup}")]
    UniverseNotContained { sub: u32, sup: u32 },
    #[error("universe mismatch: {left} vs {right}")]
    UniverseMismatch { left: u32, right: u32 },
    #[error("invalid injection: {0}")]
    InvalidInjection(String),
    #[error("partition {sub} is not contained in {sup}")]
    NotContained { sub: String, sup: String },
    #[error("{block:?} is not a block of {partition}")]
    NotABlock { block: Vec<u32>, partition: String },
    #[error("block {block:?} has no elements in the smaller domain")]
    EmptyRestriction { block: Vec<u32> },
    #[error("marked block {marked} out of range for rank {rank}")]
    MarkedOutOfRange { marked: usize, rank: usize },
    #[error("partition has empty domain")]
    EmptyDomain,
    #[error("stirling2({m}, {k}) requires k <= m")]
    InvalidStirling { m: u32, k: u32 },
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("variable x{0} has no assigned value")]
    UnassignedVariable(u32),
    #[error("variable x{var} is outside the universe {{1..{n}}}")]
    VariableOutsideUniverse { var: u32, n: u32 },
    #[error("value {value} is not an element of the model")]
    NotAnElement { value: u32 },
    #[error("invalid normal form: {0}")]
    InvalidNormalForm(String),
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("write failed: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
