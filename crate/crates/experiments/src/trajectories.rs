//! Ledger-index time series for selected teams.
//!
//! One simulation run; the table has one row per season and one column
//! per selected team holding that team's ledger index at the end of the
//! season (after settlement). A championship zeroes the value; a stretch
//! of missed playoffs without a lottery win climbs by exactly the yearly
//! increment.

use cola_core::seeding::derive_rng;
use cola_sim::season::team_name;
use cola_sim::{run_replicates, SimConfig};
use rand::seq::index::sample;

use crate::report::{ExperimentReport, Table};
use crate::ExperimentError;

/// Seeded choice of `count` distinct team indices, ascending.
pub fn pick_default_teams(cfg: &SimConfig, seed: u64, count: usize) -> Vec<usize> {
    let count = count.min(cfg.n_teams);
    let mut rng = derive_rng(seed, "trajectory-teams", 0);
    let mut teams = sample(&mut rng, cfg.n_teams, count).into_vec();
    teams.sort_unstable();
    teams
}

/// Run the trajectory experiment for the given team indices.
pub fn index_trajectories(
    cfg: &SimConfig,
    teams: &[usize],
    seasons: usize,
    seed: u64,
) -> Result<ExperimentReport, ExperimentError> {
    if seasons == 0 {
        return Err(ExperimentError::Argument(
            "index_trajectories needs at least one season".to_string(),
        ));
    }
    if teams.is_empty() {
        return Err(ExperimentError::Argument(
            "index_trajectories needs at least one team".to_string(),
        ));
    }
    for &t in teams {
        if t >= cfg.n_teams {
            return Err(ExperimentError::Argument(format!(
                "team index {t} out of range for a {}-team league",
                cfg.n_teams
            )));
        }
    }

    let runs = run_replicates(cfg, seasons, 1, seed)?;
    let run = &runs[0];

    let mut header = vec!["season".to_string()];
    header.extend(teams.iter().map(|&t| team_name(t)));
    let mut table = Table::new(header);
    for season in &run.seasons {
        let mut row = vec![season.season.to_string()];
        row.extend(teams.iter().map(|&t| season.rows[t].index_end.to_string()));
        table.push_row(row);
    }

    let mut summary = vec![
        ("seasons".to_string(), seasons.to_string()),
        (
            "teams".to_string(),
            teams
                .iter()
                .map(|&t| team_name(t))
                .collect::<Vec<_>>()
                .join(" "),
        ),
    ];
    let last = run.seasons.last().expect("at least one season");
    for &t in teams {
        summary.push((
            format!("final_index_{}", team_name(t)),
            last.rows[t].index_end.to_string(),
        ));
    }

    Ok(ExperimentReport {
        name: "index_trajectories".to_string(),
        seed,
        config: cfg.clone(),
        summary,
        table,
    })
}
