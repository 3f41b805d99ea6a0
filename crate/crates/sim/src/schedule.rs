//! Season schedule construction and game resolution.
//!
//! A season is a fixed number of full round robins (every pair meets once
//! per robin, built with the circle method) plus a number of extra random
//! perfect matchings, so every team plays the same game count. Game
//! outcomes follow a Bradley-Terry draw on latent strengths.

use rand::seq::SliceRandom;
use rand::Rng;

/// One game between two team indices.
pub type Game = (usize, usize);

/// Rounds of a single round robin for `n` teams (circle method).
/// Every round is a perfect matching; across all rounds every pair
/// meets exactly once.
fn round_robin_rounds(n: usize) -> Vec<Vec<Game>> {
    assert!(
        n >= 2 && n.is_multiple_of(2),
        "round robin needs an even team count"
    );
    // Fix team 0; rotate the rest one step per round.
    let mut ring: Vec<usize> = (1..n).collect();
    let mut rounds = Vec::with_capacity(n - 1);
    for _ in 0..n - 1 {
        let mut games = Vec::with_capacity(n / 2);
        games.push((0, ring[0]));
        for k in 1..n / 2 {
            games.push((ring[k], ring[n - 1 - k]));
        }
        rounds.push(games);
        ring.rotate_right(1);
    }
    rounds
}

/// One random perfect matching: shuffle the teams, pair adjacent entries.
fn random_matching<R: Rng>(n: usize, rng: &mut R) -> Vec<Game> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order.chunks_exact(2).map(|c| (c[0], c[1])).collect()
}

/// Full season schedule: `round_robins` circle-method robins followed by
/// `extra_matchings` random matchings drawn from `rng`.
pub fn build_schedule<R: Rng>(
    n_teams: usize,
    round_robins: usize,
    extra_matchings: usize,
    rng: &mut R,
) -> Vec<Game> {
    let robin = round_robin_rounds(n_teams);
    let mut games = Vec::with_capacity(
        round_robins * (n_teams - 1) * n_teams / 2 + extra_matchings * n_teams / 2,
    );
    for _ in 0..round_robins {
        for round in &robin {
            games.extend_from_slice(round);
        }
    }
    for _ in 0..extra_matchings {
        games.extend(random_matching(n_teams, rng));
    }
    games
}

/// Probability the first team wins under the Bradley-Terry model.
pub fn win_chance(s_a: f64, s_b: f64) -> f64 {
    s_a / (s_a + s_b)
}

/// Play every game in order, returning per-team win totals.
pub fn play_games<R: Rng>(games: &[Game], strengths: &[f64], rng: &mut R) -> Vec<u32> {
    let mut wins = vec![0u32; strengths.len()];
    for &(a, b) in games {
        if rng.gen::<f64>() < win_chance(strengths[a], strengths[b]) {
            wins[a] += 1;
        } else {
            wins[b] += 1;
        }
    }
    wins
}
