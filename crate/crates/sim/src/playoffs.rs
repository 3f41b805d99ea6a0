//! Sixteen-team best-of-seven bracket.
//!
//! Seeds enter a fixed single-elimination field laid out so seed 1 meets
//! seed 16 first and the top two seeds can only meet in the final. Each
//! series is first-to-four-wins with Bradley-Terry games. Losers are
//! tagged by the round they fell in; the last team standing is champion.

use cola_core::SeasonResult;
use rand::Rng;

use crate::schedule::win_chance;

/// Bracket field by seed number, pairing adjacent entries each round:
/// (1,16) (8,9) (4,13) (5,12) in one half, (2,15) (7,10) (3,14) (6,11)
/// in the other.
pub const BRACKET_SEED_ORDER: [usize; 16] = [1, 16, 8, 9, 4, 13, 5, 12, 2, 15, 7, 10, 3, 14, 6, 11];

/// Play a best-of-seven series; returns the winning team index.
pub fn best_of_seven<R: Rng>(a: usize, b: usize, strengths: &[f64], rng: &mut R) -> usize {
    let p_a = win_chance(strengths[a], strengths[b]);
    let mut wins_a = 0u8;
    let mut wins_b = 0u8;
    while wins_a < 4 && wins_b < 4 {
        if rng.gen::<f64>() < p_a {
            wins_a += 1;
        } else {
            wins_b += 1;
        }
    }
    if wins_a == 4 {
        a
    } else {
        b
    }
}

/// Run the full bracket. `seeded[k]` is the team index holding seed k+1.
/// Returns every entrant paired with its final playoff result.
pub fn run_playoffs<R: Rng>(
    seeded: &[usize],
    strengths: &[f64],
    rng: &mut R,
) -> Vec<(usize, SeasonResult)> {
    assert_eq!(seeded.len(), 16, "bracket needs exactly 16 seeds");
    let mut field: Vec<usize> = BRACKET_SEED_ORDER.iter().map(|&s| seeded[s - 1]).collect();
    let mut results = Vec::with_capacity(16);
    while field.len() > 1 {
        let loser_result = match field.len() {
            16 => SeasonResult::LostFirstRound,
            8 => SeasonResult::LostSecondRound,
            4 => SeasonResult::LostConfFinals,
            2 => SeasonResult::RunnerUp,
            _ => unreachable!("bracket sizes halve from 16"),
        };
        let mut next = Vec::with_capacity(field.len() / 2);
        for pair in field.chunks_exact(2) {
            let winner = best_of_seven(pair[0], pair[1], strengths, rng);
            let loser = if winner == pair[0] { pair[1] } else { pair[0] };
            results.push((loser, loser_result));
            next.push(winner);
        }
        field = next;
    }
    results.push((field[0], SeasonResult::Champion));
    results
}
