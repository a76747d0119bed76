use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: u64, n: u64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("construction requires n >= (k+2)^k = {required} (got n = {n}, k = {k})")]
    BelowThreshold { n: u64, k: u64, required: u64 },

    #[error("l=2 excluded by simple-graph convention")]
    DegenerateLength,

    #[error("length {length} is outside {lo}..={hi}")]
    LengthOutOfRange { length: u64, lo: u64, hi: u64 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
