//! Crate error type.

/// Errors reported by fallible operations.
///
/// Dimension mismatches between values that are already constructed are
/// programming errors and panic instead; the variants here cover conditions
/// a caller can legitimately hit with well-formed inputs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An index of the wrong length was supplied while building a value.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// Text input failed to parse.
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    /// A fraction was built with a zero denominator.
    #[error("zero denominator")]
    ZeroDenominator,

    /// The relevancy relation is undefined at zero.
    #[error("relevancy is undefined for the zero element")]
    ZeroOperand,

    /// An operation that needs at least one element got none.
    #[error("operation undefined on an empty collection")]
    Empty,

    /// A lift to coefficient series was attempted on an infinite carrier.
    #[error("carrier is infinite (contains a translated orthant)")]
    InfiniteCarrier,

    /// A point set that is not its own vertex set was passed where one is required.
    #[error("support is not a vertex set")]
    NotVertexSet,
}

pub type Result<T> = std::result::Result<T, Error>;
