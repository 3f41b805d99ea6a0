//! Simulation parameters.
//!
//! `SimConfig` describes the league (team count, schedule shape, strength
//! dynamics) and embeds the ledger `MechanismConfig` used to settle each
//! season. Loadable from TOML; every field has a default so a config file
//! only needs to state deviations.

use std::path::Path;

use cola_core::MechanismConfig;
use serde::{Deserialize, Serialize};

use crate::SimError;

/// Per-pick draft boost coefficients: a geometric ladder starting at
/// `first` and shrinking by `ratio` each pick, so pick 1 helps most and
/// late picks barely move a team.
pub fn default_draft_coefficients(n_teams: usize) -> Vec<f64> {
    let first = 0.02_f64;
    let ratio = 0.93_f64;
    (0..n_teams).map(|p| first * ratio.powi(p as i32)).collect()
}

/// League and dynamics parameters for the simulator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSimConfig")]
pub struct SimConfig {
    /// Number of teams in the league. Must be even so round-robin rounds
    /// pair everyone.
    pub n_teams: usize,
    /// How many full double-leg round robins each season plays
    /// (2 rounds * 29 opponents = 58 games for a 30-team league).
    pub round_robins: usize,
    /// Extra random perfect matchings appended to the schedule
    /// (24 matchings = 24 more games per team, 82 total).
    pub extra_matchings: usize,
    /// Strength ceiling; also the upper bound of the initial draw.
    pub s_max: f64,
    /// Lower bound of the initial strength draw.
    pub initial_strength_low: f64,
    /// Per-season decay factor is drawn uniformly from
    /// [`decay_low`, `decay_high`] and multiplies strength as (1 - d).
    pub decay_low: f64,
    pub decay_high: f64,
    /// Draft boost multiplier: pick p grants c(p) * (s_max - s) * beta.
    pub beta: f64,
    /// Hard floor applied to strengths after dynamics.
    pub strength_floor: f64,
    /// Initial ledger indices ramp linearly from 0 (strongest team) to
    /// `initial_index_scale * alpha` (weakest team).
    pub initial_index_scale: f64,
    /// Per-pick boost coefficients, index p-1; strictly decreasing.
    pub draft_coefficients: Vec<f64>,
    /// Ledger mechanism used to settle each simulated season.
    pub mechanism: MechanismConfig,
}

impl Default for SimConfig {
    fn default() -> Self {
        let n_teams = 30;
        Self {
            n_teams,
            round_robins: 2,
            extra_matchings: 24,
            s_max: 100.0,
            initial_strength_low: 5.0,
            decay_low: 0.05,
            decay_high: 0.15,
            beta: 7.5,
            strength_floor: 0.1,
            initial_index_scale: 3.0,
            draft_coefficients: default_draft_coefficients(n_teams),
            mechanism: MechanismConfig::default(),
        }
    }
}

/// TOML-facing mirror: every field optional, defaults resolved in
/// `TryFrom` so partial files work and validation runs on load.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSimConfig {
    n_teams: Option<usize>,
    round_robins: Option<usize>,
    extra_matchings: Option<usize>,
    s_max: Option<f64>,
    initial_strength_low: Option<f64>,
    decay_low: Option<f64>,
    decay_high: Option<f64>,
    beta: Option<f64>,
    strength_floor: Option<f64>,
    initial_index_scale: Option<f64>,
    draft_coefficients: Option<Vec<f64>>,
    mechanism: Option<MechanismConfig>,
}

impl TryFrom<RawSimConfig> for SimConfig {
    type Error = String;

    fn try_from(raw: RawSimConfig) -> Result<Self, Self::Error> {
        let defaults = SimConfig::default();
        let n_teams = raw.n_teams.unwrap_or(defaults.n_teams);
        let cfg = SimConfig {
            n_teams,
            round_robins: raw.round_robins.unwrap_or(defaults.round_robins),
            extra_matchings: raw.extra_matchings.unwrap_or(defaults.extra_matchings),
            s_max: raw.s_max.unwrap_or(defaults.s_max),
            initial_strength_low: raw
                .initial_strength_low
                .unwrap_or(defaults.initial_strength_low),
            decay_low: raw.decay_low.unwrap_or(defaults.decay_low),
            decay_high: raw.decay_high.unwrap_or(defaults.decay_high),
            beta: raw.beta.unwrap_or(defaults.beta),
            strength_floor: raw.strength_floor.unwrap_or(defaults.strength_floor),
            initial_index_scale: raw
                .initial_index_scale
                .unwrap_or(defaults.initial_index_scale),
            draft_coefficients: raw
                .draft_coefficients
                .unwrap_or_else(|| default_draft_coefficients(n_teams)),
            mechanism: raw.mechanism.unwrap_or(defaults.mechanism),
        };
        cfg.validate().map_err(|e| e.to_string())?;
        Ok(cfg)
    }
}

impl SimConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, SimError> {
        toml::from_str(text).map_err(|e| SimError::Config(e.to_string()))
    }

    pub fn from_toml_file(path: &Path) -> Result<Self, SimError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SimError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string_pretty(self).expect("a validated config serializes")
    }

    /// Total games per team in one season.
    pub fn games_per_team(&self) -> usize {
        self.round_robins * (self.n_teams - 1) + self.extra_matchings
    }

    /// Total games league-wide in one season.
    pub fn games_per_season(&self) -> usize {
        self.games_per_team() * self.n_teams / 2
    }

    pub fn validate(&self) -> Result<(), SimError> {
        let fail = |msg: String| Err(SimError::Config(msg));
        if self.n_teams < 20 {
            return fail(format!(
                "n_teams must be at least 20 to seat a 16-team bracket, got {}",
                self.n_teams
            ));
        }
        if !self.n_teams.is_multiple_of(2) {
            return fail(format!("n_teams must be even, got {}", self.n_teams));
        }
        if self.round_robins < 1 {
            return fail("round_robins must be at least 1".to_string());
        }
        if !(self.s_max.is_finite() && self.s_max > 0.0) {
            return fail(format!("s_max must be positive and finite, got {}", self.s_max));
        }
        if !(self.strength_floor > 0.0
            && self.strength_floor < self.initial_strength_low
            && self.initial_strength_low < self.s_max)
        {
            return fail(format!(
                "need 0 < strength_floor < initial_strength_low < s_max, got {} / {} / {}",
                self.strength_floor, self.initial_strength_low, self.s_max
            ));
        }
        if !(0.0 <= self.decay_low && self.decay_low < self.decay_high && self.decay_high < 1.0) {
            return fail(format!(
                "need 0 <= decay_low < decay_high < 1, got {} / {}",
                self.decay_low, self.decay_high
            ));
        }
        if !(self.beta.is_finite() && self.beta > 0.0) {
            return fail(format!("beta must be positive, got {}", self.beta));
        }
        if !(self.initial_index_scale.is_finite() && self.initial_index_scale >= 0.0) {
            return fail(format!(
                "initial_index_scale must be non-negative, got {}",
                self.initial_index_scale
            ));
        }
        if self.draft_coefficients.len() != self.n_teams {
            return fail(format!(
                "draft_coefficients must have one entry per team ({}), got {}",
                self.n_teams,
                self.draft_coefficients.len()
            ));
        }
        for (i, c) in self.draft_coefficients.iter().enumerate() {
            if !(c.is_finite() && *c > 0.0) {
                return fail(format!(
                    "draft coefficient {} must be positive and finite, got {c}",
                    i + 1
                ));
            }
            if i > 0 && *c >= self.draft_coefficients[i - 1] {
                return fail(format!(
                    "draft coefficients must be strictly decreasing, violated at pick {}",
                    i + 1
                ));
            }
        }
        self.mechanism.validate()?;
        Ok(())
    }
}
