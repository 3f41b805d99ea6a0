//! Cumulative lottery-advantage draft mechanism.
//!
//! Each team carries an integer "lottery index" across seasons. Teams on the
//! lottery side of the line gain a fixed increment per season, indices act as
//! tickets in a weighted draw for the top picks, and winning a pick (or going
//! deep in the playoffs) burns part of the accumulated index. The crate keeps
//! the arithmetic exact: indices live in integer space and every fractional
//! retention is rounded half-up at the moment it is applied.
//!
//! The entry point for a whole season is [`season::apply_season`]; the pieces
//! (increments, eligibility, the draw itself, diminishment) are exposed
//! individually so they can be tested and replayed in isolation.

pub mod config;
pub mod diminish;
pub mod error;
pub mod lottery;
pub mod season;
pub mod seeding;
pub mod snapshot;
pub mod types;

pub use config::{MechanismConfig, RemainingPickOrder, StrongYearRule};
pub use error::MechanismError;
pub use lottery::{lottery_eligibility, resolve_traded_pick, run_lottery, win_probability, Entrant};
pub use season::{
    apply_opt_out, apply_season, assign_remaining_picks, increment_indices, settle_ledgers,
    validate_playoff_structure, DraftSlot, SeasonInput, SeasonSettlement,
};
pub use types::{
    LineLevel, PickOwnership, Protection, SeasonOutcome, SeasonResult, TeamId, TeamLedger,
};
