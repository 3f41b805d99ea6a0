//! Error type shared by the mechanism operations.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MechanismError {
    /// Configuration values violate an invariant (bad fractions, mismatched
    /// team sets, malformed season structure, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// A caller-supplied argument is out of range or inconsistent.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Every remaining lottery entrant holds zero tickets, so no weighted
    /// draw is possible.
    #[error("lottery pool is empty: no entrant holds a positive ticket count")]
    EmptyLottery,

    /// Fewer eligible entrants than picks to draw.
    #[error("insufficient lottery entrants: {available} available for {needed} picks")]
    InsufficientEntrants { available: usize, needed: usize },

    /// A line-delimited data file failed to parse.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
