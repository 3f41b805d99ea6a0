//! Start-of-season state files.
//!
//! Line-delimited format, `#` comments allowed:
//!
//! ```text
//! line=N                                            (optional, once)
//! TEAM INDEX RESULT [wins=N] [opt_out] [traded=HOLDER:PROTECTION]
//! ```
//!
//! `INDEX` is the ledger value before the seasonal increment; `RESULT`
//! is a season-result token; `PROTECTION` is `none` or `top_four`. The
//! parsed state feeds straight into a full season settlement.

use std::collections::BTreeSet;

use cola_core::{
    LineLevel, MechanismError, PickOwnership, Protection, SeasonInput, SeasonOutcome, TeamLedger,
    TeamId,
};

/// Parsed state: ledgers in file order plus the season's settlement input.
#[derive(Debug, Clone)]
pub struct SeasonState {
    pub ledgers: Vec<TeamLedger>,
    pub input: SeasonInput,
}

fn parse_error(line: usize, message: impl Into<String>) -> MechanismError {
    MechanismError::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_season_state(text: &str) -> Result<SeasonState, MechanismError> {
    let mut ledgers = Vec::new();
    let mut outcomes = Vec::new();
    let mut ownerships = Vec::new();
    let mut wins = std::collections::BTreeMap::new();
    let mut line_level: Option<LineLevel> = None;
    let mut seen = BTreeSet::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let payload = raw.split('#').next().unwrap_or("").trim();
        if payload.is_empty() {
            continue;
        }

        if let Some(option_text) = payload.strip_prefix("line=") {
            if line_level.is_some() {
                return Err(parse_error(lineno, "duplicate line= directive"));
            }
            let option: u8 = option_text
                .trim()
                .parse()
                .map_err(|_| parse_error(lineno, format!("bad line option `{option_text}`")))?;
            line_level = Some(LineLevel::from_option(option).map_err(|e| {
                parse_error(lineno, e.to_string())
            })?);
            continue;
        }

        let mut fields = payload.split_whitespace();
        let team = fields
            .next()
            .ok_or_else(|| parse_error(lineno, "missing team"))?;
        let index: u64 = fields
            .next()
            .ok_or_else(|| parse_error(lineno, "missing index"))?
            .parse()
            .map_err(|_| parse_error(lineno, "index must be a non-negative integer"))?;
        let result = fields
            .next()
            .ok_or_else(|| parse_error(lineno, "missing season result"))?
            .parse()
            .map_err(|e: MechanismError| parse_error(lineno, e.to_string()))?;

        if !seen.insert(team.to_string()) {
            return Err(parse_error(lineno, format!("duplicate team `{team}`")));
        }

        let mut outcome = SeasonOutcome::new(team, result);
        let mut win_total = 0u32;
        for option in fields {
            if option == "opt_out" {
                outcome = outcome.opted_out();
            } else if let Some(value) = option.strip_prefix("wins=") {
                win_total = value
                    .parse()
                    .map_err(|_| parse_error(lineno, format!("bad win total `{value}`")))?;
            } else if let Some(value) = option.strip_prefix("traded=") {
                let (holder, protection) = value.split_once(':').ok_or_else(|| {
                    parse_error(lineno, "traded= needs HOLDER:PROTECTION")
                })?;
                let protection = match protection {
                    "none" => Protection::Unprotected,
                    "top_four" => Protection::TopFour,
                    other => {
                        return Err(parse_error(
                            lineno,
                            format!("protection must be none or top_four, got `{other}`"),
                        ))
                    }
                };
                ownerships.push(PickOwnership {
                    original: TeamId::new(team),
                    holder: TeamId::new(holder),
                    protection,
                });
            } else {
                return Err(parse_error(lineno, format!("unknown field `{option}`")));
            }
        }

        ledgers.push(TeamLedger::new(team, index));
        wins.insert(TeamId::new(team), win_total);
        outcomes.push(outcome);
    }

    if ledgers.is_empty() {
        return Err(parse_error(0, "state file lists no teams"));
    }

    Ok(SeasonState {
        ledgers,
        input: SeasonInput {
            outcomes,
            ownerships,
            wins,
            line: line_level.unwrap_or_default(),
        },
    })
}
