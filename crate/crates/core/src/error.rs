use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("offset out of range: f = {f} must satisfy 0 <= f <= s = {s}")]
    OffsetOutOfRange { s: u64, f: u64 },

    #[error("malformed signature {0:?}: expected `s,b,f` with three non-negative integers")]
    SignatureSyntax(String),

    #[error("vertex count {0} is not a positive multiple of 4")]
    VertexCount(u64),

    #[error("empty vertex range {from}..={to}")]
    EmptyRange { from: u64, to: u64 },

    #[error("malformed tiling vertex: {0}")]
    MalformedVertex(String),

    #[error("malformed map: {0}")]
    MalformedMap(String),

    /// A check that the construction guarantees has failed. Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
