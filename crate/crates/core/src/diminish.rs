//! Index diminishment: burning accumulated advantage after a win.

use crate::config::MechanismConfig;
use crate::error::MechanismError;
use crate::types::SeasonResult;

/// Round to the nearest integer, halves up: `round_half_up(437.5) == 438`.
///
/// All ledger arithmetic funnels through this so that fractional retention
/// never leaks into stored indices.
pub fn round_half_up(x: f64) -> u64 {
    debug_assert!(x >= 0.0, "ledger arithmetic never goes negative");
    (x + 0.5).floor() as u64
}

/// New index after winning pick `pick` (1-based) with the given prior index.
pub fn diminish_for_pick(
    index: u64,
    pick: u8,
    cfg: &MechanismConfig,
) -> Result<u64, MechanismError> {
    let p = pick as usize;
    if p == 0 || p > cfg.lottery_scope {
        return Err(MechanismError::Argument(format!(
            "pick {pick} outside lottery scope 1..={}",
            cfg.lottery_scope
        )));
    }
    let retained = cfg.pick_diminish[p - 1];
    Ok(round_half_up(index as f64 * retained))
}

/// New index after a playoff finish. Only playoff results diminish; passing
/// `MissedPlayoffs` is a caller error.
pub fn diminish_for_playoff(
    index: u64,
    result: SeasonResult,
    cfg: &MechanismConfig,
) -> Result<u64, MechanismError> {
    let retained = cfg.playoff_diminish.for_result(result).ok_or_else(|| {
        MechanismError::Argument(
            "playoff diminishment applies only to playoff finishes".into(),
        )
    })?;
    Ok(round_half_up(index as f64 * retained))
}
