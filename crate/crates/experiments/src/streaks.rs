//! Longest playoff and non-playoff streaks.
//!
//! Monte Carlo over independent replicates: for every team, the longest
//! run of consecutive playoff seasons and the longest run of consecutive
//! missed-playoff seasons, maximized across replicates. Short maxima mean
//! the mechanism neither locks teams into contention nor into the cellar.

use cola_sim::{run_replicates, ReplicateRun, SimConfig};

use crate::report::{ExperimentReport, Table};
use crate::ExperimentError;

/// Per-team maxima across all replicates.
#[derive(Debug, Clone, PartialEq)]
pub struct StreakStats {
    pub team: usize,
    pub max_playoff_streak: usize,
    pub max_non_playoff_streak: usize,
}

/// Length of the longest run of `true` values.
pub fn longest_run(flags: impl IntoIterator<Item = bool>) -> usize {
    let mut best = 0;
    let mut current = 0;
    for flag in flags {
        if flag {
            current += 1;
            best = best.max(current);
        } else {
            current = 0;
        }
    }
    best
}

/// (longest playoff streak, longest non-playoff streak) for one team in
/// one replicate.
pub fn team_streaks(run: &ReplicateRun, team: usize) -> (usize, usize) {
    let made: Vec<bool> = run
        .seasons
        .iter()
        .map(|s| s.rows[team].result.is_playoff())
        .collect();
    (
        longest_run(made.iter().copied()),
        longest_run(made.iter().map(|&m| !m)),
    )
}

/// Per-team maxima over a batch of replicates.
pub fn per_team_streaks(runs: &[ReplicateRun], n_teams: usize) -> Vec<StreakStats> {
    (0..n_teams)
        .map(|team| {
            let mut max_playoff = 0;
            let mut max_non_playoff = 0;
            for run in runs {
                let (p, np) = team_streaks(run, team);
                max_playoff = max_playoff.max(p);
                max_non_playoff = max_non_playoff.max(np);
            }
            StreakStats {
                team,
                max_playoff_streak: max_playoff,
                max_non_playoff_streak: max_non_playoff,
            }
        })
        .collect()
}

/// Run the streak experiment over `replicates` independent runs of
/// `seasons` seasons each.
pub fn streaks(
    cfg: &SimConfig,
    replicates: usize,
    seasons: usize,
    seed: u64,
) -> Result<ExperimentReport, ExperimentError> {
    if replicates == 0 || seasons == 0 {
        return Err(ExperimentError::Argument(
            "streaks needs at least one replicate and one season".to_string(),
        ));
    }
    let runs = run_replicates(cfg, seasons, replicates, seed)?;
    let stats = per_team_streaks(&runs, cfg.n_teams);

    let mut table = Table::new(["team", "max_playoff_streak", "max_non_playoff_streak"]);
    for s in &stats {
        table.push_row([
            cola_sim::season::team_name(s.team),
            s.max_playoff_streak.to_string(),
            s.max_non_playoff_streak.to_string(),
        ]);
    }

    let overall_playoff = stats.iter().map(|s| s.max_playoff_streak).max().unwrap_or(0);
    let overall_non_playoff = stats
        .iter()
        .map(|s| s.max_non_playoff_streak)
        .max()
        .unwrap_or(0);
    let summary = vec![
        ("replicates".to_string(), replicates.to_string()),
        ("seasons".to_string(), seasons.to_string()),
        (
            "max_playoff_streak".to_string(),
            overall_playoff.to_string(),
        ),
        (
            "max_non_playoff_streak".to_string(),
            overall_non_playoff.to_string(),
        ),
    ];

    Ok(ExperimentReport {
        name: "streaks".to_string(),
        seed,
        config: cfg.clone(),
        summary,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cola_core::SeasonResult;
    use cola_sim::{SeasonRecord, TeamRow};

    fn row(team: usize, result: SeasonResult) -> TeamRow {
        TeamRow {
            team,
            wins: 0,
            rank: 0,
            result,
            pick: 0,
            tickets: 0,
            index_start: 0,
            index_end: 0,
            strength_end: 0.0,
        }
    }

    /// A replicate where team 0's playoff participation follows `pattern`.
    fn synthetic_run(pattern: &[bool]) -> ReplicateRun {
        let seasons = pattern
            .iter()
            .enumerate()
            .map(|(i, &made)| SeasonRecord {
                season: i as u64,
                rows: vec![row(
                    0,
                    if made {
                        SeasonResult::LostFirstRound
                    } else {
                        SeasonResult::MissedPlayoffs
                    },
                )],
            })
            .collect();
        ReplicateRun {
            replicate: 0,
            seed: 0,
            seasons,
        }
    }

    #[test]
    fn longest_run_counts_maximal_blocks() {
        assert_eq!(longest_run([true, true, false, true, true, true]), 3);
        assert_eq!(longest_run([false, false]), 0);
        assert_eq!(longest_run([]), 0);
        assert_eq!(longest_run([true]), 1);
    }

    #[test]
    fn team_streaks_reads_both_sides() {
        let run = synthetic_run(&[true, true, false, false, false, true]);
        let (p, np) = team_streaks(&run, 0);
        assert_eq!(p, 2);
        assert_eq!(np, 3);
    }

    #[test]
    fn always_in_playoffs_streaks_the_whole_run() {
        // The diagnostic case: a team that makes the playoffs every season
        // has a playoff streak equal to the season count.
        let run = synthetic_run(&[true; 40]);
        let (p, np) = team_streaks(&run, 0);
        assert_eq!(p, 40);
        assert_eq!(np, 0);
    }

    #[test]
    fn frozen_top_strength_team_never_misses() {
        // Diagnostic mode: strengths pinned between seasons (no dynamics),
        // team 0 at the ceiling, the field far below. Its playoff streak
        // must equal the full season count.
        use cola_core::seeding::derive_rng;
        let strengths: Vec<f64> = std::iter::once(100.0)
            .chain(std::iter::repeat_n(0.1, 29))
            .collect();
        let seasons = 25u64;
        let mut made = Vec::new();
        for season in 0..seasons {
            let mut sched_rng = derive_rng(99, "schedule", season);
            let games = cola_sim::schedule::build_schedule(30, 2, 24, &mut sched_rng);
            let mut games_rng = derive_rng(99, "games", season);
            let wins = cola_sim::schedule::play_games(&games, &strengths, &mut games_rng);
            let mut standings_rng = derive_rng(99, "standings", season);
            let standings = cola_sim::season::rank_standings(&wins, &mut standings_rng);
            made.push(standings[..16].contains(&0));
        }
        assert_eq!(longest_run(made), seasons as usize);
    }

    #[test]
    fn streaks_never_exceed_season_count() {
        let cfg = SimConfig::default();
        let runs = run_replicates(&cfg, 8, 3, 21).unwrap();
        for s in per_team_streaks(&runs, cfg.n_teams) {
            assert!(s.max_playoff_streak <= 8);
            assert!(s.max_non_playoff_streak <= 8);
        }
    }

    #[test]
    fn maxima_aggregate_across_replicates() {
        let a = synthetic_run(&[true, false, false]);
        let b = synthetic_run(&[true, true, true]);
        let stats = per_team_streaks(&[a, b], 1);
        assert_eq!(stats[0].max_playoff_streak, 3);
        assert_eq!(stats[0].max_non_playoff_streak, 2);
    }
}
