//! Scripted, seeded experiments over the league simulator.
//!
//! Four analyses, each a pure function of (config, seed) returning an
//! `ExperimentReport` with a CSV-able table and a summary block:
//!
//! * `avg_draft_pick` — long-run per-team mean draft position;
//! * `streaks` — longest playoff / non-playoff runs over many replicates;
//! * `index_trajectories` — per-season ledger values for selected teams;
//! * `manipulation_benefit` — how much the top ticket holder could gain
//!   if standings at the playoff boundary were manipulated.

pub mod avg_pick;
pub mod manipulation;
pub mod report;
pub mod streaks;
pub mod trajectories;

pub use avg_pick::{avg_draft_pick, grand_mean_pick, per_team_pick_stats, PickStats};
pub use manipulation::{
    manipulation_benefit, potential_gain, season_manipulation, SeasonManipulation,
};
pub use report::{ExperimentReport, Table};
pub use streaks::{longest_run, per_team_streaks, streaks, team_streaks, StreakStats};
pub use trajectories::{index_trajectories, pick_default_teams};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("simulation failed: {0}")]
    Sim(#[from] cola_sim::SimError),

    #[error("experiment argument error: {0}")]
    Argument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
