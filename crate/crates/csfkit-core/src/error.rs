use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("weights differ: {0} vs {1}")]
    UnequalWeights(u32, u32),
    #[error("polynomials live in different rings: {0} vs {1} variables")]
    MismatchedVars(usize, usize),
    #[error("matrix is not square")]
    NonSquare,
    #[error("{what} {size} exceeds the limit {cap}")]
    OverCap { what: &'static str, size: usize, cap: usize },
    #[error("invalid unit interval order: {0}")]
    InvalidUio(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("multiplicity of vertex {0} must be positive")]
    ZeroMultiplicity(usize),
    #[error("sequence too short: need length at least {0}")]
    TooShort(usize),
    #[error("parameters outside the valid range for {family}: {detail}")]
    Gated { family: &'static str, detail: String },
    #[error("input is not in the domain: {0}")]
    NotInDomain(String),
    #[error("no case applies to {0}")]
    NoCase(String),
}
