//! End-of-season strength dynamics.
//!
//! Three steps run in order after each settled season: multiplicative
//! decay with a per-team uniform rate, a draft boost proportional to the
//! drafting team's headroom below the ceiling, and a redistribution that
//! linearly rescales all strengths into bounds sampled from the current
//! range (rank-preserving). A final clamp keeps every strength inside
//! [floor, ceiling].

use rand::Rng;

use crate::config::SimConfig;

/// Multiplicative decay: each strength is scaled by (1 - d) with d drawn
/// uniformly from [low, high) per team.
pub fn decay_strengths<R: Rng>(strengths: &mut [f64], low: f64, high: f64, rng: &mut R) {
    for s in strengths.iter_mut() {
        let d = rng.gen_range(low..high);
        *s *= 1.0 - d;
    }
}

/// Draft boost for one team: gain = c * (cap - s) * beta, capped at the
/// ceiling so strengths never exceed it.
pub fn draft_boost(strength: f64, coefficient: f64, beta: f64, cap: f64) -> f64 {
    let gain = coefficient * (cap - strength) * beta;
    (strength + gain).min(cap)
}

/// Apply the boost for every (team index, 1-based pick) pair.
pub fn apply_draft_boosts(strengths: &mut [f64], picks: &[(usize, usize)], cfg: &SimConfig) {
    for &(team, pick) in picks {
        let c = cfg.draft_coefficients[pick - 1];
        strengths[team] = draft_boost(strengths[team], c, cfg.beta, cfg.s_max);
    }
}

/// Redistribute strengths: sample one uniform draw per team from the
/// current [min, max] range, take the min and max of those draws as the
/// new bounds, and linearly rescale everyone into them. The map is
/// affine and increasing, so rankings are preserved. A (near-)degenerate
/// range is left untouched and consumes no randomness.
pub fn spread_strengths<R: Rng>(strengths: &mut [f64], rng: &mut R) {
    let cur_min = strengths.iter().copied().fold(f64::INFINITY, f64::min);
    let cur_max = strengths.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = cur_max - cur_min;
    if !span.is_finite() || span <= 1e-9 {
        return;
    }
    let mut new_min = f64::INFINITY;
    let mut new_max = f64::NEG_INFINITY;
    for _ in 0..strengths.len() {
        let draw = rng.gen_range(cur_min..cur_max);
        new_min = new_min.min(draw);
        new_max = new_max.max(draw);
    }
    let scale = (new_max - new_min) / span;
    for s in strengths.iter_mut() {
        *s = new_min + (*s - cur_min) * scale;
    }
}

/// Clamp every strength into [floor, cap].
pub fn clamp_strengths(strengths: &mut [f64], floor: f64, cap: f64) {
    for s in strengths.iter_mut() {
        *s = s.clamp(floor, cap);
    }
}

/// Full end-of-season pipeline: decay, draft boosts, spreading, clamp.
pub fn apply_dynamics<R: Rng>(
    strengths: &mut [f64],
    picks: &[(usize, usize)],
    cfg: &SimConfig,
    rng: &mut R,
) {
    decay_strengths(strengths, cfg.decay_low, cfg.decay_high, rng);
    apply_draft_boosts(strengths, picks, cfg);
    spread_strengths(strengths, rng);
    clamp_strengths(strengths, cfg.strength_floor, cfg.s_max);
}
