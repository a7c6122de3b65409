use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KlrError {
    #[error("invalid norm {0}: root norms must be positive and even")]
    InvalidNorm(i64),
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("invalid Cartan type {0}")]
    InvalidType(String),
    #[error("rank {rank} is not valid for type {ty}")]
    InvalidRank { ty: char, rank: usize },
    #[error("ordering must be a permutation of 1..={0}")]
    InvalidOrder(usize),
    #[error("letter {0} is not a node of the diagram")]
    InvalidLetter(u8),
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("not a positive root: {0}")]
    NotARoot(String),
    #[error("empty word")]
    EmptyWord,
    #[error("zero element has no maximal word")]
    ZeroElement,
    #[error("height {height} exceeds the guard {guard}")]
    HeightGuard { height: u32, guard: u32 },
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("datum is not simply laced")]
    NotSimplyLaced,
    #[error("component is not homogeneous")]
    NotHomogeneous,
    #[error("component is not strongly homogeneous")]
    NotStronglyHomogeneous,
    #[error("unsupported root{}", if .0.is_empty() { String::new() } else { format!(" ({})", .0) })]
    UnsupportedRoot(String),
    #[error("not supported: {0}")]
    Unsupported(String),
    #[error("module error: {0}")]
    Module(String),
    #[error("quotient is not closed: {0}")]
    NotClosed(String),
    #[error("relation check failed: {0}")]
    RelationFailed(String),
    #[error("character check failed: {0}")]
    CharacterMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, KlrError>;
