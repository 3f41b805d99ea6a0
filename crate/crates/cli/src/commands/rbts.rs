//! Survey scoring: read responses, score the round, print payments.

use std::path::Path;

use cola_rbts::{read_responses, score_round};

use crate::error::{CliError, EXIT_VALIDATION};

/// Score one survey round and print per-agent results plus the line the
/// responses move. Validation problems are listed per agent before a
/// nonzero exit.
pub fn cmd_rbts_score(responses_path: &Path, budget: f64, seed: u64) -> Result<u8, CliError> {
    let mut responses = read_responses(responses_path)?;

    // Surface every invalid response, not just the first.
    let mut invalid = 0usize;
    for response in &mut responses {
        if let Err(e) = response.validate_and_normalize_one() {
            println!("invalid {e}");
            invalid += 1;
        }
    }
    if invalid > 0 {
        println!("responses rejected: {invalid}");
        return Ok(EXIT_VALIDATION);
    }

    let scores = score_round(&mut responses, budget, seed)?;
    println!("line: {} (option {})", scores.line, scores.line.option());
    for agent in &scores.agents {
        println!(
            "agent {} choice={} prediction_score={:.6} information_score={:.6} payment={:.2}",
            agent.agent,
            agent.choice,
            agent.prediction_score,
            agent.information_score,
            agent.payment
        );
    }
    let total: f64 = scores.agents.iter().map(|a| a.payment).sum();
    println!("payments_total: {total:.2}");
    Ok(0)
}
