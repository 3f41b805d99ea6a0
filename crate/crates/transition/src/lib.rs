//! History replay for the lottery ledger.
//!
//! Given a log of season results (finish per team, plus which top picks were
//! won), fold the ledger arithmetic forward from all-zero starting indices to
//! obtain every team's current index. A replayed vector can then be diffed
//! against an independently maintained reference snapshot.
//!
//! Replay always applies pick diminishment for every pick inside the lottery
//! scope, including seasons predating the mechanism — the transition rule is
//! that history is scored as if the mechanism had always been in force.

mod event;
mod replay;

pub use event::{parse_event_log, read_event_log, validate_events, EventLog, HistoryEvent, SeasonEvents};
pub use replay::{compare_to_reference, replay_history, DeltaReport, DeltaRow};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TransitionError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A season violates a structural rule (team set, playoff multiset,
    /// pick usage, contiguity).
    #[error("season {season}: {message}")]
    Season { season: u32, message: String },

    #[error("event log is empty")]
    EmptyLog,

    /// Replayed and reference vectors cover different team sets.
    #[error("team set mismatch: {message}")]
    TeamSetMismatch { message: String },

    #[error("mechanism error: {0}")]
    Mechanism(#[from] cola_core::MechanismError),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
