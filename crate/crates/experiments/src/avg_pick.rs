//! Long-run draft-position balance.
//!
//! Runs one multi-season simulation and reports every team's mean draft
//! pick. Because each season hands out picks 1..n exactly once, the grand
//! mean across teams is (n+1)/2 identically; a balanced mechanism also
//! keeps every individual team's mean near that center.

use cola_sim::{run_replicates, ReplicateRun, SimConfig};

use crate::report::{ExperimentReport, Table};
use crate::ExperimentError;

/// Per-team pick statistics over one run.
#[derive(Debug, Clone, PartialEq)]
pub struct PickStats {
    pub team: usize,
    pub mean_pick: f64,
    pub min_pick: u32,
    pub max_pick: u32,
}

/// Mean/min/max pick for every team across all seasons of a run.
pub fn per_team_pick_stats(run: &ReplicateRun) -> Vec<PickStats> {
    let n_teams = run.seasons.first().map_or(0, |s| s.rows.len());
    let seasons = run.seasons.len() as f64;
    (0..n_teams)
        .map(|team| {
            let mut sum = 0u64;
            let mut min_pick = u32::MAX;
            let mut max_pick = 0u32;
            for season in &run.seasons {
                let pick = season.rows[team].pick;
                sum += pick as u64;
                min_pick = min_pick.min(pick);
                max_pick = max_pick.max(pick);
            }
            PickStats {
                team,
                mean_pick: sum as f64 / seasons,
                min_pick,
                max_pick,
            }
        })
        .collect()
}

/// Mean of the per-team means; (n+1)/2 whenever picks are a permutation.
pub fn grand_mean_pick(stats: &[PickStats]) -> f64 {
    stats.iter().map(|s| s.mean_pick).sum::<f64>() / stats.len() as f64
}

/// Run the balance experiment: one simulation of `seasons` seasons.
pub fn avg_draft_pick(
    cfg: &SimConfig,
    seasons: usize,
    seed: u64,
) -> Result<ExperimentReport, ExperimentError> {
    if seasons == 0 {
        return Err(ExperimentError::Argument(
            "avg_draft_pick needs at least one season".to_string(),
        ));
    }
    let runs = run_replicates(cfg, seasons, 1, seed)?;
    let stats = per_team_pick_stats(&runs[0]);

    let mut table = Table::new(["team", "mean_pick", "min_pick", "max_pick"]);
    for s in &stats {
        table.push_row([
            cola_sim::season::team_name(s.team),
            format!("{:.6}", s.mean_pick),
            s.min_pick.to_string(),
            s.max_pick.to_string(),
        ]);
    }

    let grand = grand_mean_pick(&stats);
    let lowest = stats.iter().map(|s| s.mean_pick).fold(f64::INFINITY, f64::min);
    let highest = stats
        .iter()
        .map(|s| s.mean_pick)
        .fold(f64::NEG_INFINITY, f64::max);
    let summary = vec![
        ("seasons".to_string(), seasons.to_string()),
        ("grand_mean_pick".to_string(), format!("{grand:.6}")),
        ("lowest_team_mean".to_string(), format!("{lowest:.6}")),
        ("highest_team_mean".to_string(), format!("{highest:.6}")),
    ];

    Ok(ExperimentReport {
        name: "avg_pick".to_string(),
        seed,
        config: cfg.clone(),
        summary,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_season_means_are_that_seasons_picks() {
        let cfg = SimConfig::default();
        let report = avg_draft_pick(&cfg, 1, 77).unwrap();
        let runs = run_replicates(&cfg, 1, 1, 77).unwrap();
        let stats = per_team_pick_stats(&runs[0]);
        for s in &stats {
            let pick = runs[0].seasons[0].rows[s.team].pick;
            assert!((s.mean_pick - pick as f64).abs() < 1e-12);
            assert_eq!(s.min_pick, pick);
            assert_eq!(s.max_pick, pick);
        }
        assert_eq!(report.table.rows.len(), 30);
    }

    #[test]
    fn grand_mean_is_exactly_the_center() {
        let cfg = SimConfig::default();
        let runs = run_replicates(&cfg, 12, 1, 5).unwrap();
        let stats = per_team_pick_stats(&runs[0]);
        assert!((grand_mean_pick(&stats) - 15.5).abs() < 1e-9);
    }

    #[test]
    fn zero_seasons_is_an_argument_error() {
        let cfg = SimConfig::default();
        assert!(matches!(
            avg_draft_pick(&cfg, 0, 1),
            Err(ExperimentError::Argument(_))
        ));
    }
}
