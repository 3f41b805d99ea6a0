//! Season event logs: parsing and structural validation.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use cola_core::{
    validate_playoff_structure, LineLevel, MechanismConfig, SeasonOutcome, SeasonResult, TeamId,
};

use crate::TransitionError;

/// One team's record for one historical season.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistoryEvent {
    pub season: u32,
    pub team: TeamId,
    pub result: SeasonResult,
    pub pick_won: Option<u8>,
}

/// All events for one season.
#[derive(Debug, Clone)]
pub struct SeasonEvents {
    pub season: u32,
    pub outcomes: Vec<SeasonOutcome>,
}

/// Validated, season-ordered event log.
#[derive(Debug, Clone)]
pub struct EventLog {
    /// First season in the log.
    pub epoch: u32,
    pub seasons: Vec<SeasonEvents>,
}

impl EventLog {
    pub fn teams(&self) -> Vec<TeamId> {
        let mut teams: Vec<TeamId> = self.seasons[0]
            .outcomes
            .iter()
            .map(|o| o.team.clone())
            .collect();
        teams.sort();
        teams
    }
}

/// Parse a `SEASON TEAM RESULT [PICK]` log. Comments (`#`) and blank lines
/// are skipped. Events may appear in any order.
pub fn parse_event_log(text: &str) -> Result<Vec<HistoryEvent>, TransitionError> {
    let mut events = Vec::new();
    for (line, payload) in payload_lines(text) {
        let fields: Vec<&str> = payload.split_whitespace().collect();
        if fields.len() < 3 || fields.len() > 4 {
            return Err(TransitionError::Parse {
                line,
                message: format!(
                    "expected `SEASON TEAM RESULT [PICK]`, got {} fields",
                    fields.len()
                ),
            });
        }
        let season: u32 = fields[0].parse().map_err(|e| TransitionError::Parse {
            line,
            message: format!("bad season `{}`: {e}", fields[0]),
        })?;
        let result: SeasonResult = fields[2].parse().map_err(|_| TransitionError::Parse {
            line,
            message: format!("unknown result `{}`", fields[2]),
        })?;
        let pick_won = match fields.get(3) {
            None => None,
            Some(tok) => Some(tok.parse::<u8>().map_err(|e| TransitionError::Parse {
                line,
                message: format!("bad pick `{tok}`: {e}"),
            })?),
        };
        events.push(HistoryEvent {
            season,
            team: TeamId::new(fields[1]),
            result,
            pick_won,
        });
    }
    if events.is_empty() {
        return Err(TransitionError::EmptyLog);
    }
    Ok(events)
}

pub fn read_event_log(path: &Path) -> Result<Vec<HistoryEvent>, TransitionError> {
    parse_event_log(&std::fs::read_to_string(path)?)
}

/// Group events by season and enforce the structural rules: a stable team
/// set, contiguous seasons, one record per team per season, a well-formed
/// playoff bracket, and within-scope picks (one per number, winners on the
/// lottery side of the unmoved line).
pub fn validate_events(
    events: &[HistoryEvent],
    cfg: &MechanismConfig,
) -> Result<EventLog, TransitionError> {
    if events.is_empty() {
        return Err(TransitionError::EmptyLog);
    }
    let mut by_season: BTreeMap<u32, Vec<&HistoryEvent>> = BTreeMap::new();
    for e in events {
        by_season.entry(e.season).or_default().push(e);
    }

    // contiguity
    let seasons: Vec<u32> = by_season.keys().copied().collect();
    for pair in seasons.windows(2) {
        if pair[1] != pair[0] + 1 {
            return Err(TransitionError::Season {
                season: pair[1],
                message: format!("log skips from season {} to {}", pair[0], pair[1]),
            });
        }
    }

    let mut reference_teams: Option<BTreeSet<TeamId>> = None;
    let mut out = Vec::with_capacity(by_season.len());
    for (season, season_events) in &by_season {
        let mut outcomes = Vec::with_capacity(season_events.len());
        let mut seen = BTreeSet::new();
        let mut picks_seen = BTreeSet::new();
        for e in season_events {
            if !seen.insert(e.team.clone()) {
                return Err(TransitionError::Season {
                    season: *season,
                    message: format!("team {} recorded twice", e.team),
                });
            }
            if let Some(pick) = e.pick_won {
                let p = pick as usize;
                if p == 0 || p > cfg.lottery_scope {
                    return Err(TransitionError::Season {
                        season: *season,
                        message: format!(
                            "team {} won pick {pick}, outside scope 1..={}",
                            e.team, cfg.lottery_scope
                        ),
                    });
                }
                if !picks_seen.insert(pick) {
                    return Err(TransitionError::Season {
                        season: *season,
                        message: format!("pick {pick} won by more than one team"),
                    });
                }
                if !LineLevel::NoMove.includes(e.result) {
                    return Err(TransitionError::Season {
                        season: *season,
                        message: format!(
                            "team {} won pick {pick} despite a {} finish",
                            e.team, e.result
                        ),
                    });
                }
            }
            let mut outcome = SeasonOutcome::new(e.team.as_str(), e.result);
            outcome.pick_won = e.pick_won;
            outcomes.push(outcome);
        }

        validate_playoff_structure(&outcomes).map_err(|e| TransitionError::Season {
            season: *season,
            message: e.to_string(),
        })?;

        match &reference_teams {
            None => reference_teams = Some(seen),
            Some(expected) => {
                if expected != &seen {
                    return Err(TransitionError::Season {
                        season: *season,
                        message: "team set differs from the log's first season".into(),
                    });
                }
            }
        }
        out.push(SeasonEvents {
            season: *season,
            outcomes,
        });
    }

    Ok(EventLog {
        epoch: seasons[0],
        seasons: out,
    })
}

fn payload_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}
