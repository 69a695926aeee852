use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Variants are grouped by the CLI exit code they map to (see [`Error::exit_code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid ribbon graph: {0}")]
    Validation(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("coorientation is not closed at vertex {vertex}")]
    NotClosed { vertex: usize },

    #[error(
        "degenerate smoothing at vertex {vertex}: the result would contain a vertex-free loop"
    )]
    DegenerateSmoothing { vertex: usize },

    #[error("genus 0: trivial norm")]
    TrivialNorm,

    #[error("polytope is not centrally symmetric")]
    NotSymmetric,

    #[error("polytope vertices are not pairwise congruent mod 2")]
    ParityFailure,

    #[error("degenerate polygon: {0}")]
    Degenerate(String),

    #[error("geodesic collection has a single slope and does not fill the torus")]
    SingleSlope,

    #[error("{edges} edges exceed the enumeration cap of {cap}")]
    ResourceLimit { edges: usize, cap: usize },

    #[error("minimum-cycle search did not stabilize within potential bound {cap}")]
    Unconverged { cap: u32 },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::Validation(_) | Error::DimensionMismatch { .. } | Error::NotClosed { .. } => 3,
            Error::DegenerateSmoothing { .. }
            | Error::TrivialNorm
            | Error::NotSymmetric
            | Error::ParityFailure
            | Error::Degenerate(_)
            | Error::SingleSlope => 4,
            Error::ResourceLimit { .. } | Error::Unconverged { .. } => 5,
        }
    }
}
