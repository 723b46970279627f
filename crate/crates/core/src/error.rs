use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("loop at vertex {0} rejected")]
    LoopRejected(usize),
    #[error("vertex count {0} unsupported (must be 1..=64)")]
    SizeUnsupported(usize),
    #[error("color count {0} unsupported")]
    ColorsUnsupported(usize),
    #[error("color {color} out of range for {m} colors")]
    InvalidColor { color: usize, m: usize },
    #[error("empty vertex selection")]
    EmptySelection,
    #[error("exhaustion too large: {what}")]
    ExhaustionTooLarge { what: String },
    #[error("oracle too large: {0} vertices (limit 16)")]
    OracleTooLarge(usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },
    #[error("graph too small for this extraction: {0} vertices")]
    TooSmall(usize),
    #[error("integer overflow evaluating {0}")]
    BoundOverflow(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("undecided within budget: threshold lies in [{lower}, {}]", upper.map_or("?".to_string(), |u| u.to_string()))]
    Undecided { lower: u64, upper: Option<u64> },
    #[error("certificate rejected: {0}")]
    Certificate(String),
}
