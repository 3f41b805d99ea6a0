//! Experiment harness commands.

use std::path::Path;

use cola_experiments::{
    avg_draft_pick, index_trajectories, manipulation_benefit, pick_default_teams, streaks,
    ExperimentReport,
};
use cola_sim::SimConfig;

use crate::error::CliError;

/// Which experiment to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ExperimentName {
    /// Per-team mean draft pick over one long run.
    AvgPick,
    /// Longest playoff / non-playoff streaks over many replicates.
    Streaks,
    /// Ledger-index time series for selected teams.
    IndexTrajectories,
    /// Potential gain from manipulating the playoff boundary.
    Manipulation,
}

/// Run one experiment and write its CSV + summary under `out_dir`.
#[allow(clippy::too_many_arguments)]
pub fn cmd_experiment(
    name: ExperimentName,
    cfg: &SimConfig,
    seasons: Option<usize>,
    replicates: Option<usize>,
    teams: Option<&[usize]>,
    seed: u64,
    out_dir: &Path,
) -> Result<u8, CliError> {
    let report: ExperimentReport = match name {
        ExperimentName::AvgPick => avg_draft_pick(cfg, seasons.unwrap_or(1000), seed)?,
        ExperimentName::Streaks => streaks(
            cfg,
            replicates.unwrap_or(50),
            seasons.unwrap_or(100),
            seed,
        )?,
        ExperimentName::IndexTrajectories => {
            let chosen = match teams {
                Some(t) => t.to_vec(),
                None => pick_default_teams(cfg, seed, 2),
            };
            index_trajectories(cfg, &chosen, seasons.unwrap_or(100), seed)?
        }
        ExperimentName::Manipulation => manipulation_benefit(cfg, seasons.unwrap_or(1000), seed)?,
    };

    print!("{}", report.summary_text());
    let (csv_path, summary_path) = report.write_to_dir(out_dir)?;
    println!("wrote {}", csv_path.display());
    println!("wrote {}", summary_path.display());
    Ok(0)
}

/// Parse a comma-separated team list: entries are either canonical names
/// ("T05") or 1-based team numbers ("5"); returned as 0-based indices.
pub fn parse_team_list(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|entry| {
            let entry = entry.trim();
            let digits = entry
                .strip_prefix('T')
                .or_else(|| entry.strip_prefix('t'))
                .unwrap_or(entry);
            digits
                .parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .map(|n| n - 1)
                .ok_or_else(|| {
                    CliError::validation(format!(
                        "bad team `{entry}`: use a 1-based number or a name like T05"
                    ))
                })
        })
        .collect()
}
