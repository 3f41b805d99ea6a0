//! Whole-season settlement: increments, the draw, diminishment, draft order.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::config::{MechanismConfig, RemainingPickOrder, StrongYearRule};
use crate::diminish::{diminish_for_pick, diminish_for_playoff};
use crate::error::MechanismError;
use crate::lottery::{lottery_eligibility, resolve_traded_pick, run_lottery, Entrant};
use crate::types::{LineLevel, PickOwnership, SeasonOutcome, TeamId, TeamLedger};

/// Everything known about a finished season before settlement runs.
#[derive(Debug, Clone, Default)]
pub struct SeasonInput {
    pub outcomes: Vec<SeasonOutcome>,
    /// Traded upcoming picks; teams absent from this list own their pick.
    pub ownerships: Vec<PickOwnership>,
    /// Regular-season win totals, used when remaining picks go by standings.
    /// Teams missing from the map count as zero wins.
    pub wins: BTreeMap<TeamId, u32>,
    /// Where the line lands this season.
    pub line: LineLevel,
}

/// One slot in the final draft order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DraftSlot {
    pub pick: u32,
    /// Team the slot belongs to (the original owner, for ledger purposes).
    pub slot_team: TeamId,
    /// Team actually drafting here once trades and protections resolve.
    pub drafting_team: TeamId,
    pub via_lottery: bool,
    /// Holder a protected pick reverted from, if protection fired.
    pub reverted_from: Option<TeamId>,
}

/// Result of settling a season.
#[derive(Debug, Clone)]
pub struct SeasonSettlement {
    /// Post-season ledgers, in the same order as the input ledgers.
    pub ledgers: Vec<TeamLedger>,
    /// Complete draft order, one slot per team.
    pub draft_order: Vec<DraftSlot>,
    /// The draw pool as it stood when the balls came out (post-increment).
    pub entrants: Vec<Entrant>,
    /// Lottery winners in pick order.
    pub winners: Vec<TeamId>,
}

fn increment_granted(line: LineLevel, rule: StrongYearRule) -> bool {
    match rule {
        StrongYearRule::AlwaysAlpha => true,
        // Increment only in seasons where at least 8 teams stay excluded.
        StrongYearRule::Binary84 => line.excluded_count() >= 8,
    }
}

/// Apply the seasonal increment to every lottery-side team.
///
/// Opted-out teams and teams whose pick left unprotected still accrue: the
/// increment follows the team's position relative to the line, not its
/// participation in this particular draw.
pub fn increment_indices(
    ledgers: &[TeamLedger],
    outcomes: &[SeasonOutcome],
    line: LineLevel,
    cfg: &MechanismConfig,
) -> Result<Vec<TeamLedger>, MechanismError> {
    let result_by_team = outcome_map(outcomes)?;
    check_team_sets(ledgers, &result_by_team)?;
    let granted = increment_granted(line, cfg.strong_year_rule);
    Ok(ledgers
        .iter()
        .map(|l| {
            let outcome = result_by_team[&l.team];
            let mut next = l.clone();
            if granted && line.includes(outcome.result) {
                next.lottery_index += cfg.alpha;
            }
            next
        })
        .collect())
}

/// Charge the opt-out cost against a ledger, flooring at zero.
pub fn apply_opt_out(ledger: &TeamLedger, cfg: &MechanismConfig) -> TeamLedger {
    TeamLedger {
        team: ledger.team.clone(),
        lottery_index: ledger.lottery_index.saturating_sub(cfg.opt_out_cost),
    }
}

/// Order the non-lottery slots.
///
/// Both modes put remaining lottery-side teams before playoff-side teams.
/// `ByStandings` sorts each partition by ascending wins (worst drafts
/// first); `ByLotteryIndex` sorts by descending current index. Ties break
/// by the supplied RNG.
pub fn assign_remaining_picks(
    lottery_side: &[TeamId],
    playoff_side: &[TeamId],
    ledgers: &[TeamLedger],
    wins: &BTreeMap<TeamId, u32>,
    order: RemainingPickOrder,
    rng: &mut impl Rng,
) -> Vec<TeamId> {
    let index_by_team: BTreeMap<&TeamId, u64> = ledgers
        .iter()
        .map(|l| (&l.team, l.lottery_index))
        .collect();
    let mut sort_partition = |teams: &[TeamId]| -> Vec<TeamId> {
        let mut keyed: Vec<(i64, u64, TeamId)> = teams
            .iter()
            .map(|t| {
                let key = match order {
                    RemainingPickOrder::ByStandings => {
                        i64::from(wins.get(t).copied().unwrap_or(0))
                    }
                    // negate so that a plain ascending sort puts the
                    // highest index first
                    RemainingPickOrder::ByLotteryIndex => {
                        -(index_by_team.get(t).copied().unwrap_or(0) as i64)
                    }
                };
                (key, rng.gen::<u64>(), t.clone())
            })
            .collect();
        keyed.sort_by_key(|k| (k.0, k.1));
        keyed.into_iter().map(|(_, _, t)| t).collect()
    };
    let mut out = sort_partition(lottery_side);
    out.extend(sort_partition(playoff_side));
    out
}

/// Settle ledgers for a season whose pick winners are already known.
///
/// This is the arithmetic core shared by live settlement and history replay:
/// seasonal increment, opt-out cost, pick diminishment, then playoff
/// diminishment for teams left on the playoff side of the line.
pub fn settle_ledgers(
    ledgers: &[TeamLedger],
    outcomes: &[SeasonOutcome],
    line: LineLevel,
    cfg: &MechanismConfig,
) -> Result<Vec<TeamLedger>, MechanismError> {
    cfg.validate()?;
    let by_team = outcome_map(outcomes)?;
    check_team_sets(ledgers, &by_team)?;
    validate_picks(outcomes, line, cfg)?;
    let granted = increment_granted(line, cfg.strong_year_rule);

    let mut out = Vec::with_capacity(ledgers.len());
    for ledger in ledgers {
        let outcome = by_team[&ledger.team];
        let mut index = ledger.lottery_index;
        let lottery_side = line.includes(outcome.result);
        if lottery_side && granted {
            index += cfg.alpha;
        }
        if outcome.opted_out {
            if !lottery_side {
                return Err(MechanismError::Argument(format!(
                    "team {} opted out but sits on the playoff side of the line",
                    outcome.team
                )));
            }
            index = index.saturating_sub(cfg.opt_out_cost);
        }
        if let Some(pick) = outcome.pick_won {
            index = diminish_for_pick(index, pick, cfg)?;
        }
        if !lottery_side && outcome.result.is_playoff() {
            index = diminish_for_playoff(index, outcome.result, cfg)?;
        }
        out.push(TeamLedger {
            team: ledger.team.clone(),
            lottery_index: index,
        });
    }
    Ok(out)
}

/// Run a full season: increments, eligibility, the weighted draw, traded-pick
/// resolution, diminishment, and the complete draft order.
pub fn apply_season(
    ledgers: &[TeamLedger],
    input: &SeasonInput,
    rng: &mut impl Rng,
    cfg: &MechanismConfig,
) -> Result<SeasonSettlement, MechanismError> {
    cfg.validate()?;
    let by_team = outcome_map(&input.outcomes)?;
    check_team_sets(ledgers, &by_team)?;
    validate_playoff_structure(&input.outcomes)?;
    for outcome in &input.outcomes {
        if outcome.pick_won.is_some() {
            return Err(MechanismError::Argument(format!(
                "team {} arrives with a pick already assigned; settlement draws picks itself",
                outcome.team
            )));
        }
        if outcome.opted_out && !input.line.includes(outcome.result) {
            return Err(MechanismError::Argument(format!(
                "team {} opted out but sits on the playoff side of the line",
                outcome.team
            )));
        }
    }
    validate_ownerships(&input.ownerships, &by_team)?;

    // 1. increments
    let incremented = increment_indices(ledgers, &input.outcomes, input.line, cfg)?;

    // 2. eligibility and the draw (tickets include this season's increment)
    let entrants =
        lottery_eligibility(&incremented, &input.outcomes, &input.ownerships, input.line)?;
    let winners = run_lottery(&entrants, rng, cfg)?;

    // 3. resolve winners against the trade book
    let mut reverted_from: BTreeMap<TeamId, TeamId> = BTreeMap::new();
    for winner in &winners {
        let resolved = resolve_traded_pick(winner, &input.ownerships)?;
        if let Some(holder) = resolved.reverted_from {
            reverted_from.insert(winner.clone(), holder);
        }
    }

    // 4. ledger arithmetic via the shared settlement core
    let outcomes_with_picks: Vec<SeasonOutcome> = input
        .outcomes
        .iter()
        .map(|o| {
            let mut o = o.clone();
            o.pick_won = winners
                .iter()
                .position(|w| w == &o.team)
                .map(|i| (i + 1) as u8);
            o
        })
        .collect();
    let settled = settle_ledgers(ledgers, &outcomes_with_picks, input.line, cfg)?;

    // 5. remaining slots: lottery-side non-winners first, then playoff side
    let winner_set: BTreeSet<&TeamId> = winners.iter().collect();
    let mut lottery_rest = Vec::new();
    let mut playoff_rest = Vec::new();
    for outcome in &input.outcomes {
        if winner_set.contains(&outcome.team) {
            continue;
        }
        if input.line.includes(outcome.result) {
            lottery_rest.push(outcome.team.clone());
        } else {
            playoff_rest.push(outcome.team.clone());
        }
    }
    let rest = assign_remaining_picks(
        &lottery_rest,
        &playoff_rest,
        &settled,
        &input.wins,
        cfg.remaining_pick_order,
        rng,
    );

    // 6. draft order, honoring trades on non-reverted slots
    let holder_of: BTreeMap<&TeamId, &TeamId> = input
        .ownerships
        .iter()
        .filter(|o| o.holder != o.original)
        .map(|o| (&o.original, &o.holder))
        .collect();
    let mut draft_order = Vec::with_capacity(input.outcomes.len());
    for (i, winner) in winners.iter().enumerate() {
        draft_order.push(DraftSlot {
            pick: (i + 1) as u32,
            slot_team: winner.clone(),
            drafting_team: winner.clone(),
            via_lottery: true,
            reverted_from: reverted_from.get(winner).cloned(),
        });
    }
    for (i, team) in rest.iter().enumerate() {
        let drafting = holder_of.get(team).copied().unwrap_or(team).clone();
        draft_order.push(DraftSlot {
            pick: (winners.len() + i + 1) as u32,
            slot_team: team.clone(),
            drafting_team: drafting,
            via_lottery: false,
            reverted_from: None,
        });
    }

    Ok(SeasonSettlement {
        ledgers: settled,
        draft_order,
        entrants,
        winners,
    })
}

fn outcome_map(
    outcomes: &[SeasonOutcome],
) -> Result<BTreeMap<&TeamId, &SeasonOutcome>, MechanismError> {
    let mut map = BTreeMap::new();
    for o in outcomes {
        if map.insert(&o.team, o).is_some() {
            return Err(MechanismError::Config(format!(
                "team {} appears twice in season outcomes",
                o.team
            )));
        }
    }
    if map.is_empty() {
        return Err(MechanismError::Config("no season outcomes supplied".into()));
    }
    Ok(map)
}

fn check_team_sets(
    ledgers: &[TeamLedger],
    outcomes: &BTreeMap<&TeamId, &SeasonOutcome>,
) -> Result<(), MechanismError> {
    let ledger_teams: BTreeSet<&TeamId> = ledgers.iter().map(|l| &l.team).collect();
    if ledger_teams.len() != ledgers.len() {
        return Err(MechanismError::Config("duplicate team in ledgers".into()));
    }
    let outcome_teams: BTreeSet<&TeamId> = outcomes.keys().copied().collect();
    if ledger_teams != outcome_teams {
        return Err(MechanismError::Config(
            "ledger team set differs from outcome team set".into(),
        ));
    }
    Ok(())
}

/// A season must produce exactly one champion, one runner-up, two
/// conference-finals losers, four second-round losers and eight first-round
/// losers; everyone else missed.
pub fn validate_playoff_structure(outcomes: &[SeasonOutcome]) -> Result<(), MechanismError> {
    use crate::types::SeasonResult::*;
    let mut counts = BTreeMap::new();
    for o in outcomes {
        *counts.entry(o.result).or_insert(0u32) += 1;
    }
    let expected = [
        (Champion, 1),
        (RunnerUp, 1),
        (LostConfFinals, 2),
        (LostSecondRound, 4),
        (LostFirstRound, 8),
    ];
    for (result, want) in expected {
        let got = counts.get(&result).copied().unwrap_or(0);
        if got != want {
            return Err(MechanismError::Config(format!(
                "season must contain exactly {want} {result} finishes, got {got}"
            )));
        }
    }
    Ok(())
}

fn validate_picks(
    outcomes: &[SeasonOutcome],
    line: LineLevel,
    cfg: &MechanismConfig,
) -> Result<(), MechanismError> {
    let mut seen = BTreeSet::new();
    for o in outcomes {
        let Some(pick) = o.pick_won else { continue };
        let p = pick as usize;
        if p == 0 || p > cfg.lottery_scope {
            return Err(MechanismError::Config(format!(
                "team {} won pick {pick}, outside scope 1..={}",
                o.team, cfg.lottery_scope
            )));
        }
        if !seen.insert(pick) {
            return Err(MechanismError::Config(format!(
                "pick {pick} won by more than one team"
            )));
        }
        if !line.includes(o.result) {
            return Err(MechanismError::Config(format!(
                "team {} won pick {pick} from the playoff side of the line",
                o.team
            )));
        }
        if o.opted_out {
            return Err(MechanismError::Config(format!(
                "team {} both opted out and won pick {pick}",
                o.team
            )));
        }
    }
    Ok(())
}

fn validate_ownerships(
    ownerships: &[PickOwnership],
    teams: &BTreeMap<&TeamId, &SeasonOutcome>,
) -> Result<(), MechanismError> {
    let mut seen = BTreeSet::new();
    for own in ownerships {
        if !teams.contains_key(&own.original) {
            return Err(MechanismError::Config(format!(
                "traded pick references unknown team {}",
                own.original
            )));
        }
        if !teams.contains_key(&own.holder) {
            return Err(MechanismError::Config(format!(
                "traded pick references unknown holder {}",
                own.holder
            )));
        }
        if !seen.insert(&own.original) {
            return Err(MechanismError::Config(format!(
                "team {} has more than one ownership record for its pick",
                own.original
            )));
        }
    }
    Ok(())
}
