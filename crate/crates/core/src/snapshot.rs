//! Line-delimited ledger snapshots and draft-order records.
//!
//! Snapshot format: one `TEAM INDEX` pair per line, `#` starts a comment,
//! blank lines are skipped. Draft-order format: one slot per line,
//! `PICK SLOT_TEAM [drafts=HOLDER] [lottery] [reverted_from=TEAM]`.

use std::collections::BTreeSet;
use std::path::Path;

use crate::error::MechanismError;
use crate::season::DraftSlot;
use crate::types::{TeamId, TeamLedger};

/// Strip comments and return `(line_number, payload)` for non-blank lines.
pub(crate) fn payload_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

pub fn parse_ledger_snapshot(text: &str) -> Result<Vec<TeamLedger>, MechanismError> {
    let mut ledgers = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, payload) in payload_lines(text) {
        let mut parts = payload.split_whitespace();
        let team = parts.next().ok_or_else(|| MechanismError::Parse {
            line,
            message: "missing team id".into(),
        })?;
        let index: u64 = parts
            .next()
            .ok_or_else(|| MechanismError::Parse {
                line,
                message: format!("missing index for team {team}"),
            })?
            .parse()
            .map_err(|e| MechanismError::Parse {
                line,
                message: format!("bad index for team {team}: {e}"),
            })?;
        if let Some(extra) = parts.next() {
            return Err(MechanismError::Parse {
                line,
                message: format!("unexpected trailing token `{extra}`"),
            });
        }
        if !seen.insert(team.to_string()) {
            return Err(MechanismError::Parse {
                line,
                message: format!("team {team} listed twice"),
            });
        }
        ledgers.push(TeamLedger::new(team, index));
    }
    if ledgers.is_empty() {
        return Err(MechanismError::Parse {
            line: 0,
            message: "snapshot contains no ledger entries".into(),
        });
    }
    Ok(ledgers)
}

pub fn read_ledger_snapshot(path: &Path) -> Result<Vec<TeamLedger>, MechanismError> {
    parse_ledger_snapshot(&std::fs::read_to_string(path)?)
}

pub fn format_ledger_snapshot(ledgers: &[TeamLedger]) -> String {
    let mut out = String::new();
    for l in ledgers {
        out.push_str(&format!("{} {}\n", l.team, l.lottery_index));
    }
    out
}

pub fn format_draft_order(slots: &[DraftSlot]) -> String {
    let mut out = String::new();
    for s in slots {
        out.push_str(&format!("{} {}", s.pick, s.slot_team));
        if s.drafting_team != s.slot_team {
            out.push_str(&format!(" drafts={}", s.drafting_team));
        }
        if s.via_lottery {
            out.push_str(" lottery");
        }
        if let Some(holder) = &s.reverted_from {
            out.push_str(&format!(" reverted_from={holder}"));
        }
        out.push('\n');
    }
    out
}

/// Sort ledgers by team id; handy before writing snapshots for stable diffs.
pub fn sorted_by_team(mut ledgers: Vec<TeamLedger>) -> Vec<TeamLedger> {
    ledgers.sort_by(|a, b| a.team.cmp(&b.team));
    ledgers
}

/// Convenience: look up one team's index.
pub fn index_of(ledgers: &[TeamLedger], team: &str) -> Option<u64> {
    let id = TeamId::new(team);
    ledgers.iter().find(|l| l.team == id).map(|l| l.lottery_index)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snapshot_round_trip() {
        let text = "# may ledgers\nSAC 6109\nCHI 6000\n\nBKN 5226 # trailing note\n";
        let ledgers = parse_ledger_snapshot(text).unwrap();
        assert_eq!(ledgers.len(), 3);
        assert_eq!(index_of(&ledgers, "BKN"), Some(5226));
        let rendered = format_ledger_snapshot(&ledgers);
        let again = parse_ledger_snapshot(&rendered).unwrap();
        assert_eq!(ledgers, again);
    }

    #[test]
    fn snapshot_errors_carry_line_numbers() {
        let err = parse_ledger_snapshot("SAC 6109\nCHI notanumber\n").unwrap_err();
        match err {
            MechanismError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_ledger_snapshot("SAC 1\nSAC 2\n").is_err(), "duplicate");
        assert!(parse_ledger_snapshot("SAC 1 extra\n").is_err(), "trailing");
        assert!(parse_ledger_snapshot("# only comments\n").is_err(), "empty");
    }

    #[test]
    fn draft_order_rendering() {
        let slots = vec![
            DraftSlot {
                pick: 1,
                slot_team: TeamId::new("DAL"),
                drafting_team: TeamId::new("DAL"),
                via_lottery: true,
                reverted_from: None,
            },
            DraftSlot {
                pick: 2,
                slot_team: TeamId::new("SAS"),
                drafting_team: TeamId::new("SAS"),
                via_lottery: true,
                reverted_from: Some(TeamId::new("ATL")),
            },
            DraftSlot {
                pick: 5,
                slot_team: TeamId::new("UTA"),
                drafting_team: TeamId::new("BOS"),
                via_lottery: false,
                reverted_from: None,
            },
        ];
        let text = format_draft_order(&slots);
        assert_eq!(
            text,
            "1 DAL lottery\n2 SAS lottery reverted_from=ATL\n5 UTA drafts=BOS\n"
        );
    }
}
