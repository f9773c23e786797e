use thiserror::Error;

/// Errors raised by diagram construction, enumeration, word maps and geometry.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed diagram: {0}")]
    Structure(String),

    #[error("diagram is not a valid shadow: {0}")]
    NotCheckerboard(String),

    #[error("state word has length {got}, diagram has {expected} crossings")]
    WordLength { expected: usize, got: usize },

    #[error("{crossings} crossings exceeds the brute-force cap of {cap} (2^{crossings} states)")]
    CapExceeded { crossings: usize, cap: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("word {word} is outside the domain: {reason}")]
    Domain { word: String, reason: String },

    #[error("invalid rosette: {0}")]
    Geometry(String),

    #[error("every probe around vertex {vertex} lies within {margin:e} of a circle; use a smaller probe distance")]
    Tolerance { vertex: usize, margin: f64 },

    #[error("cannot parse {0:?} as a binary word")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
