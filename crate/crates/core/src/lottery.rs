//! Eligibility and the weighted draw itself.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::config::MechanismConfig;
use crate::error::MechanismError;
use crate::types::{LineLevel, PickOwnership, Protection, SeasonOutcome, TeamId, TeamLedger};

/// A team standing in the draw, with its ticket count (= current index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entrant {
    pub team: TeamId,
    pub tickets: u64,
}

/// Probability that an entrant holding `tickets` wins the first draw out of
/// `total` outstanding tickets.
pub fn win_probability(tickets: u64, total: u64) -> Result<f64, MechanismError> {
    if total == 0 {
        return Err(MechanismError::EmptyLottery);
    }
    if tickets > total {
        return Err(MechanismError::Argument(format!(
            "ticket count {tickets} exceeds pool total {total}"
        )));
    }
    Ok(tickets as f64 / total as f64)
}

/// Which teams enter the draw.
///
/// A team enters when it sits on the lottery side of the line, has not opted
/// out, and has not traded its upcoming pick away unprotected. A pick traded
/// with top-four protection keeps its original team in the draw (the pick
/// would revert on a win). Holding someone else's pick never grants an extra
/// entry: eligibility is evaluated per team, not per pick held.
pub fn lottery_eligibility(
    ledgers: &[TeamLedger],
    outcomes: &[SeasonOutcome],
    ownerships: &[PickOwnership],
    line: LineLevel,
) -> Result<Vec<Entrant>, MechanismError> {
    let index_by_team: BTreeMap<&TeamId, u64> = ledgers
        .iter()
        .map(|l| (&l.team, l.lottery_index))
        .collect();
    if index_by_team.len() != ledgers.len() {
        return Err(MechanismError::Config("duplicate team in ledgers".into()));
    }

    let mut traded_unprotected = BTreeSet::new();
    for own in ownerships {
        if own.holder == own.original {
            continue; // a pick that came home is just an owned pick
        }
        if own.protection == Protection::Unprotected {
            traded_unprotected.insert(&own.original);
        }
    }

    let mut entrants = Vec::new();
    for outcome in outcomes {
        if !line.includes(outcome.result) || outcome.opted_out {
            continue;
        }
        if traded_unprotected.contains(&outcome.team) {
            continue;
        }
        let tickets = *index_by_team.get(&outcome.team).ok_or_else(|| {
            MechanismError::Config(format!("no ledger for team {}", outcome.team))
        })?;
        entrants.push(Entrant {
            team: outcome.team.clone(),
            tickets,
        });
    }
    Ok(entrants)
}

/// Run the weighted draw: `cfg.lottery_scope` sequential draws without
/// replacement, each entrant weighted by its tickets. Entrants holding zero
/// tickets cannot win and are skipped. Returns winners in pick order.
pub fn run_lottery(
    entrants: &[Entrant],
    rng: &mut impl Rng,
    cfg: &MechanismConfig,
) -> Result<Vec<TeamId>, MechanismError> {
    // Scope zero turns the lottery off: every pick is slotted, none drawn.
    if cfg.lottery_scope == 0 {
        return Ok(Vec::new());
    }
    let mut pool: Vec<&Entrant> = entrants.iter().filter(|e| e.tickets > 0).collect();
    if pool.is_empty() {
        return Err(MechanismError::EmptyLottery);
    }
    if pool.len() < cfg.lottery_scope {
        return Err(MechanismError::InsufficientEntrants {
            available: pool.len(),
            needed: cfg.lottery_scope,
        });
    }

    let mut winners = Vec::with_capacity(cfg.lottery_scope);
    for _ in 0..cfg.lottery_scope {
        let total: u64 = pool.iter().map(|e| e.tickets).sum();
        let mut ball = rng.gen_range(0..total);
        let mut chosen = pool.len() - 1;
        for (i, entrant) in pool.iter().enumerate() {
            if ball < entrant.tickets {
                chosen = i;
                break;
            }
            ball -= entrant.tickets;
        }
        winners.push(pool.remove(chosen).team.clone());
    }
    Ok(winners)
}

/// Outcome of resolving a winning slot against the trade book.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedPick {
    /// Team that ends up drafting at the slot.
    pub drafting_team: TeamId,
    /// Team whose ledger the diminishment hits (always the winner itself).
    pub ledger_team: TeamId,
    /// Holder the pick reverted from, when top-four protection fired.
    pub reverted_from: Option<TeamId>,
}

/// Resolve a lottery winner's slot against traded-pick records.
///
/// An unprotected traded pick never reaches here (its original team was not
/// eligible); encountering one is an inconsistency. A protected traded pick
/// reverts: the original team drafts and its ledger is diminished.
pub fn resolve_traded_pick(
    winner: &TeamId,
    ownerships: &[PickOwnership],
) -> Result<ResolvedPick, MechanismError> {
    for own in ownerships {
        if &own.original == winner && own.holder != own.original {
            return match own.protection {
                Protection::Unprotected => Err(MechanismError::Config(format!(
                    "team {winner} won a draw but its pick was traded unprotected; \
                     it should not have been eligible"
                ))),
                Protection::TopFour => Ok(ResolvedPick {
                    drafting_team: winner.clone(),
                    ledger_team: winner.clone(),
                    reverted_from: Some(own.holder.clone()),
                }),
            };
        }
    }
    Ok(ResolvedPick {
        drafting_team: winner.clone(),
        ledger_team: winner.clone(),
        reverted_from: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeding::derive_rng;
    use crate::types::SeasonResult;

    fn entrants(spec: &[(&str, u64)]) -> Vec<Entrant> {
        spec.iter()
            .map(|(t, n)| Entrant {
                team: TeamId::new(*t),
                tickets: *n,
            })
            .collect()
    }

    #[test]
    fn win_probability_is_ticket_share() {
        // 2025 reference pool: 49,461 tickets total; a 7,109-ticket team wins
        // the first draw 14.4% of the time, 1,000 tickets give 2.0%.
        let total = 49_461;
        assert!((win_probability(7_109, total).unwrap() - 0.1437).abs() < 5e-4);
        assert!((win_probability(1_000, total).unwrap() - 0.0202).abs() < 5e-4);
        assert_eq!(win_probability(0, total).unwrap(), 0.0);
        assert!(win_probability(1, 0).is_err());
        assert!(win_probability(2, 1).is_err());
    }

    #[test]
    fn draws_are_weighted_and_without_replacement() {
        let pool = entrants(&[("A", 6000), ("B", 3000), ("C", 1000), ("D", 500), ("E", 1)]);
        let cfg = MechanismConfig::default();
        let trials = 40_000;
        let mut first_wins: BTreeMap<String, u32> = BTreeMap::new();
        for i in 0..trials {
            let mut rng = derive_rng(9, "fairness", i);
            let winners = run_lottery(&pool, &mut rng, &cfg).unwrap();
            assert_eq!(winners.len(), 4);
            let unique: BTreeSet<_> = winners.iter().collect();
            assert_eq!(unique.len(), 4, "no double winners");
            *first_wins.entry(winners[0].to_string()).or_default() += 1;
        }
        let total_tickets = 10_501.0;
        let share = |t: &str| first_wins.get(t).copied().unwrap_or(0) as f64 / trials as f64;
        // ~3 sigma tolerance at 40k trials is well under 0.01
        assert!((share("A") - 6000.0 / total_tickets).abs() < 0.01);
        assert!((share("B") - 3000.0 / total_tickets).abs() < 0.01);
        assert!((share("C") - 1000.0 / total_tickets).abs() < 0.01);
    }

    #[test]
    fn scope_zero_draws_nothing() {
        // A scope of zero disables the lottery entirely: no winners, no
        // randomness consumed, and an empty pool is not an error.
        let cfg = MechanismConfig {
            lottery_scope: 0,
            pick_diminish: Vec::new(),
            ..MechanismConfig::default()
        };
        cfg.validate().unwrap();
        let mut rng = derive_rng(1, "scope0", 0);
        let winners = run_lottery(&entrants(&[("A", 10)]), &mut rng, &cfg).unwrap();
        assert!(winners.is_empty());
        let winners = run_lottery(&[], &mut rng, &cfg).unwrap();
        assert!(winners.is_empty());
    }

    #[test]
    fn zero_ticket_entrants_never_win() {
        let pool = entrants(&[("A", 10), ("B", 0), ("C", 5), ("D", 3), ("E", 2), ("F", 1)]);
        let cfg = MechanismConfig::default();
        for i in 0..200 {
            let mut rng = derive_rng(11, "zero", i);
            let winners = run_lottery(&pool, &mut rng, &cfg).unwrap();
            assert!(!winners.contains(&TeamId::new("B")));
        }
    }

    #[test]
    fn lottery_error_cases() {
        let cfg = MechanismConfig::default();
        let mut rng = derive_rng(0, "err", 0);
        // all zero tickets -> empty pool
        let pool = entrants(&[("A", 0), ("B", 0), ("C", 0), ("D", 0), ("E", 0)]);
        assert!(matches!(
            run_lottery(&pool, &mut rng, &cfg),
            Err(MechanismError::EmptyLottery)
        ));
        // three positive entrants cannot fill four picks
        let pool = entrants(&[("A", 5), ("B", 5), ("C", 5), ("D", 0)]);
        assert!(matches!(
            run_lottery(&pool, &mut rng, &cfg),
            Err(MechanismError::InsufficientEntrants {
                available: 3,
                needed: 4
            })
        ));
    }

    #[test]
    fn deterministic_under_fixed_seed() {
        let pool = entrants(&[("A", 100), ("B", 200), ("C", 300), ("D", 400), ("E", 500)]);
        let cfg = MechanismConfig::default();
        let a = run_lottery(&pool, &mut derive_rng(77, "det", 0), &cfg).unwrap();
        let b = run_lottery(&pool, &mut derive_rng(77, "det", 0), &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn eligibility_respects_line_optout_and_trades() {
        let ledgers = vec![
            TeamLedger::new("A", 100),
            TeamLedger::new("B", 200),
            TeamLedger::new("C", 300),
            TeamLedger::new("D", 400),
            TeamLedger::new("E", 500),
        ];
        let outcomes = vec![
            SeasonOutcome::new("A", SeasonResult::MissedPlayoffs),
            SeasonOutcome::new("B", SeasonResult::MissedPlayoffs).opted_out(),
            SeasonOutcome::new("C", SeasonResult::MissedPlayoffs), // traded unprotected
            SeasonOutcome::new("D", SeasonResult::MissedPlayoffs), // traded, protected
            SeasonOutcome::new("E", SeasonResult::LostFirstRound), // playoff side
        ];
        let ownerships = vec![
            PickOwnership::new("C", "E", Protection::Unprotected),
            PickOwnership::new("D", "E", Protection::TopFour),
        ];
        let entrants =
            lottery_eligibility(&ledgers, &outcomes, &ownerships, LineLevel::NoMove).unwrap();
        let names: Vec<&str> = entrants.iter().map(|e| e.team.as_str()).collect();
        assert_eq!(names, vec!["A", "D"]);
        assert_eq!(entrants[1].tickets, 400);

        // moving the line one tier pulls E in
        let entrants = lottery_eligibility(
            &ledgers,
            &outcomes,
            &ownerships,
            LineLevel::IncludeFirstRoundLosers,
        )
        .unwrap();
        let names: Vec<&str> = entrants.iter().map(|e| e.team.as_str()).collect();
        assert_eq!(names, vec!["A", "D", "E"]);
    }

    #[test]
    fn traded_pick_resolution() {
        let ownerships = vec![
            PickOwnership::new("C", "E", Protection::Unprotected),
            PickOwnership::new("D", "E", Protection::TopFour),
        ];
        // own pick: trivial resolution
        let r = resolve_traded_pick(&TeamId::new("A"), &ownerships).unwrap();
        assert_eq!(r.drafting_team, TeamId::new("A"));
        assert_eq!(r.reverted_from, None);
        // protected pick reverts to the winner, whose ledger pays
        let r = resolve_traded_pick(&TeamId::new("D"), &ownerships).unwrap();
        assert_eq!(r.drafting_team, TeamId::new("D"));
        assert_eq!(r.ledger_team, TeamId::new("D"));
        assert_eq!(r.reverted_from, Some(TeamId::new("E")));
        // an unprotected traded pick winning is an inconsistency
        assert!(resolve_traded_pick(&TeamId::new("C"), &ownerships).is_err());
    }
}
