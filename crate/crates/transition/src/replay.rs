//! Fold validated event logs into ledgers and diff against references.

use std::collections::BTreeMap;

use cola_core::{settle_ledgers, LineLevel, MechanismConfig, TeamId, TeamLedger};

use crate::event::EventLog;
use crate::TransitionError;

/// Replay a validated log from all-zero ledgers. Every season settles under
/// the unmoved line. Returns ledgers sorted by team id.
pub fn replay_history(
    log: &EventLog,
    cfg: &MechanismConfig,
) -> Result<Vec<TeamLedger>, TransitionError> {
    let mut ledgers: Vec<TeamLedger> = log
        .teams()
        .into_iter()
        .map(|team| TeamLedger {
            team,
            lottery_index: 0,
        })
        .collect();
    for season in &log.seasons {
        ledgers = settle_ledgers(&ledgers, &season.outcomes, LineLevel::NoMove, cfg).map_err(
            |e| TransitionError::Season {
                season: season.season,
                message: e.to_string(),
            },
        )?;
    }
    Ok(ledgers)
}

/// One team's replayed-vs-reference comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaRow {
    pub team: TeamId,
    pub replayed: u64,
    pub reference: u64,
}

impl DeltaRow {
    pub fn delta(&self) -> i64 {
        self.replayed as i64 - self.reference as i64
    }
}

/// Full comparison, one row per team (sorted by team id).
#[derive(Debug, Clone)]
pub struct DeltaReport {
    pub rows: Vec<DeltaRow>,
}

impl DeltaReport {
    pub fn is_match(&self) -> bool {
        self.rows.iter().all(|r| r.delta() == 0)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &DeltaRow> {
        self.rows.iter().filter(|r| r.delta() != 0)
    }
}

/// Diff a replayed vector against a reference snapshot. The two must cover
/// the same team set.
pub fn compare_to_reference(
    replayed: &[TeamLedger],
    reference: &[TeamLedger],
) -> Result<DeltaReport, TransitionError> {
    let map = |ledgers: &[TeamLedger]| -> BTreeMap<TeamId, u64> {
        ledgers
            .iter()
            .map(|l| (l.team.clone(), l.lottery_index))
            .collect()
    };
    let got = map(replayed);
    let want = map(reference);
    if got.len() != replayed.len() || want.len() != reference.len() {
        return Err(TransitionError::TeamSetMismatch {
            message: "duplicate team in a ledger vector".into(),
        });
    }
    if got.keys().ne(want.keys()) {
        let only_got: Vec<String> = got
            .keys()
            .filter(|t| !want.contains_key(*t))
            .map(|t| t.to_string())
            .collect();
        let only_want: Vec<String> = want
            .keys()
            .filter(|t| !got.contains_key(*t))
            .map(|t| t.to_string())
            .collect();
        return Err(TransitionError::TeamSetMismatch {
            message: format!(
                "replay-only teams [{}], reference-only teams [{}]",
                only_got.join(", "),
                only_want.join(", ")
            ),
        });
    }
    let rows = got
        .into_iter()
        .map(|(team, replayed)| {
            let reference = want[&team];
            DeltaRow {
                team,
                replayed,
                reference,
            }
        })
        .collect();
    Ok(DeltaReport { rows })
}
