//! Potential benefit of manipulating the playoff boundary.
//!
//! A lottery team could in principle gain win probability if standings
//! at the playoff line flipped: a high-ticket lottery team swaps into the
//! playoffs (its tickets leave the pool) while a low-ticket playoff team
//! drops out (fewer tickets come back in). Per season we take the four
//! teams straddling the line in the standings, compute the ticket swing
//! Delta of such a swap, and evaluate what the largest ticket holder
//! would gain: T/(P - Delta) - T/P.
//!
//! Two Delta variants are reported. The *conservative* (widest) one pairs
//! the higher-index lottery-side team with the lower-index playoff-side
//! team — the most favorable swap, so the gain is an overestimate. The
//! *literal* (narrowest) one pairs the other way. The headline numbers
//! use the conservative variant.

use cola_sim::season::PLAYOFF_TEAMS;
use cola_sim::{run_replicates, SeasonRecord, SimConfig};

use crate::report::{ExperimentReport, Table};
use crate::ExperimentError;

/// Win-probability gain for a team holding `top_tickets` if `delta`
/// tickets left a pool of `pool`: T/(P - Delta) - T/P. Requires
/// delta < pool.
pub fn potential_gain(top_tickets: u64, pool: u64, delta: u64) -> f64 {
    assert!(pool > delta, "pool must exceed the removed tickets");
    let t = top_tickets as f64;
    t / (pool - delta) as f64 - t / pool as f64
}

/// One season's boundary analysis.
#[derive(Debug, Clone, PartialEq)]
pub struct SeasonManipulation {
    pub season: u64,
    /// Total tickets in the lottery pool.
    pub pool: u64,
    /// Largest single entrant's tickets.
    pub top_tickets: u64,
    /// Widest boundary swap: max lottery-side index minus min
    /// playoff-side index (floored at zero), pre-increment.
    pub delta_conservative: u64,
    /// Narrowest boundary swap: min lottery-side index minus max
    /// playoff-side index (floored at zero), pre-increment.
    pub delta_literal: u64,
    pub gain_conservative: f64,
    pub gain_literal: f64,
}

/// Analyze one season's boundary. Returns `None` when the season has no
/// lottery pool to manipulate (caller should skip it with a warning).
pub fn season_manipulation(record: &SeasonRecord) -> Option<SeasonManipulation> {
    let pool: u64 = record.rows.iter().map(|r| r.tickets).sum();
    let top_tickets = record.rows.iter().map(|r| r.tickets).max().unwrap_or(0);
    if pool == 0 {
        return None;
    }

    // The four teams straddling the playoff line in the standings:
    // ranks 15 and 16 made it, ranks 17 and 18 just missed. Indices are
    // taken before the yearly increment, since a swapped pair would both
    // sit on the other side of the increment as well.
    let idx = |rank: usize| {
        let team = record.team_at_rank(rank);
        record.rows[team].index_start
    };
    let playoff_pair = [idx(PLAYOFF_TEAMS - 1), idx(PLAYOFF_TEAMS)];
    let lottery_pair = [idx(PLAYOFF_TEAMS + 1), idx(PLAYOFF_TEAMS + 2)];

    let delta_conservative = lottery_pair
        .iter()
        .max()
        .unwrap()
        .saturating_sub(*playoff_pair.iter().min().unwrap());
    let delta_literal = lottery_pair
        .iter()
        .min()
        .unwrap()
        .saturating_sub(*playoff_pair.iter().max().unwrap());

    Some(SeasonManipulation {
        season: record.season,
        pool,
        top_tickets,
        delta_conservative,
        delta_literal,
        gain_conservative: potential_gain(top_tickets, pool, delta_conservative),
        gain_literal: potential_gain(top_tickets, pool, delta_literal),
    })
}

/// Run the manipulation experiment over one `seasons`-long simulation.
pub fn manipulation_benefit(
    cfg: &SimConfig,
    seasons: usize,
    seed: u64,
) -> Result<ExperimentReport, ExperimentError> {
    if seasons == 0 {
        return Err(ExperimentError::Argument(
            "manipulation_benefit needs at least one season".to_string(),
        ));
    }
    let runs = run_replicates(cfg, seasons, 1, seed)?;
    let mut rows = Vec::with_capacity(seasons);
    let mut skipped = 0usize;
    for record in &runs[0].seasons {
        match season_manipulation(record) {
            Some(m) => rows.push(m),
            None => skipped += 1,
        }
    }

    let mut table = Table::new([
        "season",
        "pool",
        "top_tickets",
        "delta_conservative",
        "gain_conservative",
        "delta_literal",
        "gain_literal",
    ]);
    for m in &rows {
        table.push_row([
            m.season.to_string(),
            m.pool.to_string(),
            m.top_tickets.to_string(),
            m.delta_conservative.to_string(),
            format!("{:.9}", m.gain_conservative),
            m.delta_literal.to_string(),
            format!("{:.9}", m.gain_literal),
        ]);
    }

    let n = rows.len().max(1) as f64;
    let mean = |f: &dyn Fn(&SeasonManipulation) -> f64| rows.iter().map(f).sum::<f64>() / n;
    let max_gain_conservative = rows
        .iter()
        .map(|m| m.gain_conservative)
        .fold(0.0_f64, f64::max);
    let max_gain_literal = rows.iter().map(|m| m.gain_literal).fold(0.0_f64, f64::max);
    let share_below_threshold = if rows.is_empty() {
        0.0
    } else {
        rows.iter().filter(|m| m.gain_conservative < 0.015).count() as f64 / rows.len() as f64
    };

    let summary = vec![
        ("seasons".to_string(), seasons.to_string()),
        ("analyzed_seasons".to_string(), rows.len().to_string()),
        ("skipped_empty_pool_seasons".to_string(), skipped.to_string()),
        (
            "delta_variants".to_string(),
            "headline = conservative (widest boundary swap); literal = narrowest".to_string(),
        ),
        ("mean_pool".to_string(), format!("{:.1}", mean(&|m| m.pool as f64))),
        (
            "mean_top_tickets".to_string(),
            format!("{:.1}", mean(&|m| m.top_tickets as f64)),
        ),
        (
            "mean_delta_conservative".to_string(),
            format!("{:.1}", mean(&|m| m.delta_conservative as f64)),
        ),
        (
            "mean_gain_conservative_pct".to_string(),
            format!("{:.4}", 100.0 * mean(&|m| m.gain_conservative)),
        ),
        (
            "max_gain_conservative_pct".to_string(),
            format!("{:.4}", 100.0 * max_gain_conservative),
        ),
        (
            "share_gain_below_1.5pct".to_string(),
            format!("{share_below_threshold:.4}"),
        ),
        (
            "mean_delta_literal".to_string(),
            format!("{:.1}", mean(&|m| m.delta_literal as f64)),
        ),
        (
            "max_gain_literal_pct".to_string(),
            format!("{:.4}", 100.0 * max_gain_literal),
        ),
    ];

    Ok(ExperimentReport {
        name: "manipulation".to_string(),
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
    use cola_sim::TeamRow;

    #[test]
    fn gain_matches_closed_form() {
        // T = 6015, P = 43410, Delta = 1805: from 13.9% to 14.5%, a gain
        // of 0.6% (0.0060 as a fraction).
        let gain = potential_gain(6015, 43_410, 1805);
        let expected = 6015.0 / 41_605.0 - 6015.0 / 43_410.0;
        assert!((gain - expected).abs() < 1e-15);
        assert_eq!(format!("{:.2}", 100.0 * gain), "0.60");
        assert!((potential_gain(6015, 43_410, 0)).abs() < 1e-15);
    }

    fn boundary_record(
        playoff_indices: [u64; 2],
        lottery_indices: [u64; 2],
        filler_tickets: u64,
    ) -> SeasonRecord {
        // Ranks 1..=30; ranks 15,16 playoff-side boundary, 17,18 lottery
        // side. Lottery ticket counts are index_start + 1000 for ranks
        // >= 17 (the 14 lottery teams), 0 otherwise.
        let rows: Vec<TeamRow> = (1..=30usize)
            .map(|rank| {
                let index_start = match rank {
                    15 => playoff_indices[0],
                    16 => playoff_indices[1],
                    17 => lottery_indices[0],
                    18 => lottery_indices[1],
                    _ => filler_tickets,
                };
                let made = rank <= 16;
                TeamRow {
                    team: rank - 1,
                    wins: (82 - rank) as u32,
                    rank,
                    result: if made {
                        SeasonResult::LostFirstRound
                    } else {
                        SeasonResult::MissedPlayoffs
                    },
                    pick: rank as u32,
                    tickets: if made { 0 } else { index_start + 1000 },
                    index_start,
                    index_end: 0,
                    strength_end: 50.0,
                }
            })
            .collect();
        SeasonRecord { season: 7, rows }
    }

    #[test]
    fn deltas_use_the_boundary_pairs() {
        let record = boundary_record([400, 900], [2500, 1200], 3000);
        let m = season_manipulation(&record).unwrap();
        // Conservative: 2500 - 400; literal: 1200 - 900.
        assert_eq!(m.delta_conservative, 2100);
        assert_eq!(m.delta_literal, 300);
        // Pool: 14 lottery teams, ranks 17..=30: (2500+1000) + (1200+1000)
        // + 12 * (3000+1000).
        assert_eq!(m.pool, 3500 + 2200 + 12 * 4000);
        assert_eq!(m.top_tickets, 4000);
        assert!(m.gain_conservative > m.gain_literal);
    }

    #[test]
    fn inverted_boundary_floors_at_zero() {
        // Playoff-side boundary teams hold MORE index than the lottery
        // side: no beneficial swap exists, both deltas floor at zero.
        let record = boundary_record([5000, 6000], [100, 50], 3000);
        let m = season_manipulation(&record).unwrap();
        assert_eq!(m.delta_conservative, 0);
        assert_eq!(m.delta_literal, 0);
        assert!(m.gain_conservative.abs() < 1e-15);
    }

    #[test]
    fn conservative_never_below_literal() {
        let cfg = SimConfig::default();
        let runs = run_replicates(&cfg, 25, 1, 13).unwrap();
        for record in &runs[0].seasons {
            let m = season_manipulation(record).unwrap();
            assert!(m.delta_conservative >= m.delta_literal);
            assert!(m.gain_conservative >= m.gain_literal - 1e-15);
            assert!(m.pool > m.delta_conservative);
        }
    }

    #[test]
    fn report_runs_end_to_end() {
        let cfg = SimConfig::default();
        let report = manipulation_benefit(&cfg, 10, 3).unwrap();
        assert_eq!(report.table.rows.len(), 10);
        let text = report.summary_text();
        assert!(text.contains("share_gain_below_1.5pct"));
    }
}
