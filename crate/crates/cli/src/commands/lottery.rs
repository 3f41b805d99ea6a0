//! Single-season lottery settlement from a state file.

use std::path::{Path, PathBuf};

use cola_core::seeding::derive_rng;
use cola_core::snapshot::{format_draft_order, format_ledger_snapshot};
use cola_core::{apply_season, win_probability, MechanismConfig};

use crate::error::CliError;
use crate::state::parse_season_state;

/// Settle one season: increments, the weighted draw, diminishment, and the
/// full draft order. Updated ledgers are written next to the input file.
pub fn cmd_lottery(state_path: &Path, seed: u64, cfg: &MechanismConfig) -> Result<u8, CliError> {
    let text = std::fs::read_to_string(state_path)?;
    let state = parse_season_state(&text)?;

    let mut rng = derive_rng(seed, "lottery", 0);
    let settlement = apply_season(&state.ledgers, &state.input, &mut rng, cfg)?;

    println!(
        "line: {} (option {})",
        state.input.line,
        state.input.line.option()
    );
    let pool: u64 = settlement.entrants.iter().map(|e| e.tickets).sum();
    println!(
        "pool: {} tickets across {} entrants",
        pool,
        settlement.entrants.len()
    );
    for entrant in &settlement.entrants {
        let chance = win_probability(entrant.tickets, pool)?;
        println!(
            "entrant {} tickets={} first_pick_chance={:.1}%",
            entrant.team,
            entrant.tickets,
            100.0 * chance
        );
    }
    print!("{}", format_draft_order(&settlement.draft_order));

    let out_path = settled_path(state_path);
    std::fs::write(&out_path, format_ledger_snapshot(&settlement.ledgers))?;
    println!("ledgers written: {}", out_path.display());
    Ok(0)
}

/// `foo.state` -> `foo.settled.ledger`, next to the input.
fn settled_path(input: &Path) -> PathBuf {
    let stem = input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "season".to_string());
    input.with_file_name(format!("{stem}.settled.ledger"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn settled_path_sits_next_to_input() {
        assert_eq!(
            settled_path(Path::new("/tmp/x/season_2025.state")),
            PathBuf::from("/tmp/x/season_2025.settled.ledger")
        );
    }
}
