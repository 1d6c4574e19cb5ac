//! Error type shared across the library.

use std::fmt;

/// Errors produced by construction, solving, and synthesis routines.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A vector or matrix has the wrong length for the ambient dimension.
    DimensionMismatch { expected: usize, found: usize },
    /// A linear program failed input validation.
    MalformedProgram(String),
    /// The simplex solver hit its internal safety iteration cap.
    SolverLimit(String),
    /// Operation requires a polyhedral function with at least one piece.
    EmptyFunction,
    /// A piece exceeds the unit dual-norm ball beyond tolerance.
    PieceNormExceeded { norm: f64 },
    /// Synthesis parameters out of range (epsilon >= 1, theta > 0, delta > 0).
    InvalidParams(String),
    /// Witness states must lie on the unit sphere.
    WitnessNotNormalized { norm: f64 },
    /// Witness already present in the set (within tolerance).
    DuplicateWitness,
    /// The verifier returned a counterexample identical to an existing
    /// witness; indicates inconsistent tolerances between learner and verifier.
    StalledLoop { iteration: usize },
    /// No mode region admits the current state during integration.
    CoverageGap { time: f64, state: Vec<f64> },
    /// Perturbation sampling requires every mode region to be the full space.
    RegionNotFullSpace { mode: usize },
    /// Benchmark constructor called with an unsupported dimension.
    InvalidDimension { dimension: usize },
    /// A region halfspace has a zero normal vector.
    ZeroNormal,
    /// File or format error from the I/O layer.
    Format(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::MalformedProgram(msg) => write!(f, "malformed linear program: {msg}"),
            Error::SolverLimit(msg) => write!(f, "solver limit reached: {msg}"),
            Error::EmptyFunction => write!(f, "polyhedral function has no pieces"),
            Error::PieceNormExceeded { norm } => {
                write!(f, "piece dual norm {norm} exceeds 1 beyond tolerance")
            }
            Error::InvalidParams(msg) => write!(f, "invalid synthesis parameters: {msg}"),
            Error::WitnessNotNormalized { norm } => {
                write!(f, "witness max-norm {norm} is not 1 within tolerance")
            }
            Error::DuplicateWitness => write!(f, "witness duplicates an existing one"),
            Error::StalledLoop { iteration } => {
                write!(f, "synthesis stalled at iteration {iteration}: repeated counterexample")
            }
            Error::CoverageGap { time, state } => {
                write!(f, "no mode region contains state {state:?} at t = {time}")
            }
            Error::RegionNotFullSpace { mode } => {
                write!(f, "mode {mode} region is not the full space")
            }
            Error::InvalidDimension { dimension } => {
                write!(f, "unsupported dimension {dimension}")
            }
            Error::ZeroNormal => write!(f, "region halfspace has a zero normal"),
            Error::Format(msg) => write!(f, "format error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Format(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
