//! History replay and reference verification.

use std::path::Path;

use cola_core::snapshot::{format_ledger_snapshot, read_ledger_snapshot};
use cola_core::MechanismConfig;
use cola_transition::{compare_to_reference, read_event_log, replay_history, validate_events};

use crate::error::CliError;

/// Replay an event log from zero ledgers and print the final snapshot.
/// With a reference, also diff against it; exit 1 on any delta.
pub fn cmd_replay(
    events: &Path,
    reference: Option<&Path>,
    cfg: &MechanismConfig,
) -> Result<u8, CliError> {
    let parsed = read_event_log(events)?;
    let log = validate_events(&parsed, cfg)?;
    let last_season = log.epoch + log.seasons.len() as u32 - 1;
    let ledgers = replay_history(&log, cfg)?;

    println!(
        "replayed: {} teams, seasons {}..={}",
        ledgers.len(),
        log.epoch,
        last_season
    );
    print!("{}", format_ledger_snapshot(&ledgers));

    match reference {
        None => Ok(0),
        Some(ref_path) => diff_against(&ledgers, ref_path),
    }
}

/// Replay and compare only; prints a verdict instead of the snapshot.
pub fn cmd_verify(events: &Path, reference: &Path, cfg: &MechanismConfig) -> Result<u8, CliError> {
    let parsed = read_event_log(events)?;
    let log = validate_events(&parsed, cfg)?;
    let ledgers = replay_history(&log, cfg)?;
    let code = diff_against(&ledgers, reference)?;
    if code == 0 {
        println!("verify: PASS ({} teams)", ledgers.len());
    } else {
        println!("verify: FAIL");
    }
    Ok(code)
}

fn diff_against(
    ledgers: &[cola_core::TeamLedger],
    ref_path: &Path,
) -> Result<u8, CliError> {
    let reference = read_ledger_snapshot(ref_path)?;
    let report = compare_to_reference(ledgers, &reference)?;
    if report.is_match() {
        println!("reference: match ({} teams)", ledgers.len());
        Ok(0)
    } else {
        for row in report.mismatches() {
            println!(
                "delta {} replayed={} reference={}",
                row.team, row.replayed, row.reference
            );
        }
        println!("reference: {} deltas", report.mismatches().count());
        Ok(1)
    }
}
