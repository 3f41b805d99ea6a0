//! Mechanism parameters and their TOML representation.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::MechanismError;
use crate::types::SeasonResult;

/// How non-lottery draft slots are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RemainingPickOrder {
    /// Worst regular-season record drafts first (lottery-side teams before
    /// playoff-side teams).
    ByStandings,
    /// Highest remaining lottery index drafts first, same partition.
    ByLotteryIndex,
}

/// When a moved line shrinks the excluded side, does everyone on the lottery
/// side still receive the seasonal increment?
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrongYearRule {
    /// Increment only when at least 8 teams stay excluded; a line that leaves
    /// 4 or fewer excluded grants no increment that season.
    #[serde(rename = "binary_8_4")]
    Binary84,
    /// Always grant the increment regardless of where the line lands.
    AlwaysAlpha,
}

/// Retained index fraction after each playoff finish (deep runs burn more).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlayoffRetention {
    pub champion: f64,
    pub runner_up: f64,
    pub lost_conf_finals: f64,
    pub lost_second_round: f64,
    pub lost_first_round: f64,
}

impl PlayoffRetention {
    pub fn for_result(&self, result: SeasonResult) -> Option<f64> {
        match result {
            SeasonResult::MissedPlayoffs => None,
            SeasonResult::LostFirstRound => Some(self.lost_first_round),
            SeasonResult::LostSecondRound => Some(self.lost_second_round),
            SeasonResult::LostConfFinals => Some(self.lost_conf_finals),
            SeasonResult::RunnerUp => Some(self.runner_up),
            SeasonResult::Champion => Some(self.champion),
        }
    }
}

/// Full parameter set for the mechanism.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMechanismConfig")]
pub struct MechanismConfig {
    /// Seasonal index increment for lottery-side teams.
    pub alpha: u64,
    /// Retained fraction after winning pick `p` (element `p - 1`). Length
    /// equals `lottery_scope`; pick 1 burns everything by default.
    pub pick_diminish: Vec<f64>,
    pub playoff_diminish: PlayoffRetention,
    /// Index cost of declining lottery participation (floored at zero).
    pub opt_out_cost: u64,
    /// Number of picks decided by the weighted draw.
    pub lottery_scope: usize,
    pub remaining_pick_order: RemainingPickOrder,
    pub strong_year_rule: StrongYearRule,
}

impl Default for MechanismConfig {
    fn default() -> Self {
        MechanismConfig {
            alpha: 1000,
            pick_diminish: vec![0.0, 0.25, 0.50, 0.75],
            playoff_diminish: PlayoffRetention {
                champion: 0.0,
                runner_up: 0.25,
                lost_conf_finals: 0.50,
                lost_second_round: 0.75,
                lost_first_round: 1.0,
            },
            opt_out_cost: 2000,
            lottery_scope: 4,
            remaining_pick_order: RemainingPickOrder::ByStandings,
            strong_year_rule: StrongYearRule::Binary84,
        }
    }
}

/// TOML mirror: every field optional; `opt_out_cost` defaults to `2 * alpha`.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMechanismConfig {
    alpha: Option<u64>,
    pick_diminish: Option<Vec<f64>>,
    playoff_diminish: Option<PlayoffRetention>,
    opt_out_cost: Option<u64>,
    lottery_scope: Option<usize>,
    remaining_pick_order: Option<RemainingPickOrder>,
    strong_year_rule: Option<StrongYearRule>,
}

impl TryFrom<RawMechanismConfig> for MechanismConfig {
    type Error = MechanismError;

    fn try_from(raw: RawMechanismConfig) -> Result<Self, Self::Error> {
        let defaults = MechanismConfig::default();
        let alpha = raw.alpha.unwrap_or(defaults.alpha);
        let cfg = MechanismConfig {
            alpha,
            pick_diminish: raw.pick_diminish.unwrap_or(defaults.pick_diminish),
            playoff_diminish: raw.playoff_diminish.unwrap_or(defaults.playoff_diminish),
            opt_out_cost: raw.opt_out_cost.unwrap_or(2 * alpha),
            lottery_scope: raw.lottery_scope.unwrap_or(defaults.lottery_scope),
            remaining_pick_order: raw
                .remaining_pick_order
                .unwrap_or(defaults.remaining_pick_order),
            strong_year_rule: raw.strong_year_rule.unwrap_or(defaults.strong_year_rule),
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

impl MechanismConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, MechanismError> {
        toml::from_str(text).map_err(|e| MechanismError::Config(format!("bad mechanism config: {e}")))
    }

    pub fn from_toml_file(path: &Path) -> Result<Self, MechanismError> {
        let text = std::fs::read_to_string(path)?;
        Self::from_toml_str(&text)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string_pretty(self).expect("mechanism config serializes")
    }

    /// Check structural invariants; every constructor path runs this.
    pub fn validate(&self) -> Result<(), MechanismError> {
        if self.alpha == 0 {
            return Err(MechanismError::Config("alpha must be at least 1".into()));
        }
        if self.pick_diminish.len() != self.lottery_scope {
            return Err(MechanismError::Config(format!(
                "pick_diminish must list one retained fraction per pick in scope \
                 (got {} fractions for scope {})",
                self.pick_diminish.len(),
                self.lottery_scope
            )));
        }
        let in_unit = |x: f64| (0.0..=1.0).contains(&x);
        for (i, f) in self.pick_diminish.iter().enumerate() {
            if !in_unit(*f) {
                return Err(MechanismError::Config(format!(
                    "pick_diminish[{i}] = {f} outside [0, 1]"
                )));
            }
        }
        if !self.pick_diminish.windows(2).all(|w| w[0] < w[1]) {
            return Err(MechanismError::Config(
                "pick_diminish must be strictly increasing: earlier picks burn more".into(),
            ));
        }
        let p = &self.playoff_diminish;
        let ladder = [
            ("champion", p.champion),
            ("runner_up", p.runner_up),
            ("lost_conf_finals", p.lost_conf_finals),
            ("lost_second_round", p.lost_second_round),
            ("lost_first_round", p.lost_first_round),
        ];
        for (name, f) in ladder {
            if !in_unit(f) {
                return Err(MechanismError::Config(format!(
                    "playoff_diminish.{name} = {f} outside [0, 1]"
                )));
            }
        }
        if !ladder.windows(2).all(|w| w[0].1 <= w[1].1) {
            return Err(MechanismError::Config(
                "playoff_diminish must not decrease from champion to first-round loser".into(),
            ));
        }
        Ok(())
    }
}
