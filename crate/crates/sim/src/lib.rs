//! Agent-based league simulator.
//!
//! Thirty teams with latent strengths play seeded seasons: a full schedule
//! of pairwise games, a sixteen-team best-of-seven bracket, lottery
//! settlement through the ledger mechanism, then strength dynamics (decay,
//! draft boost, spreading). Everything is driven by labeled RNG streams
//! derived from one master seed, so replicates are reproducible and
//! independent of execution order — the parallel and sequential drivers
//! produce identical output.

pub mod config;
pub mod dynamics;
pub mod playoffs;
pub mod replicate;
pub mod schedule;
pub mod season;

pub use config::{default_draft_coefficients, SimConfig};
pub use replicate::{run_replicates, run_replicates_seq, ReplicateRun};
pub use season::{simulate_season, LeagueState, SeasonRecord, TeamRow};

#[cfg(feature = "parallel")]
pub use replicate::run_replicates_par;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("simulation config error: {0}")]
    Config(String),

    #[error("mechanism error: {0}")]
    Mechanism(#[from] cola_core::MechanismError),
}
