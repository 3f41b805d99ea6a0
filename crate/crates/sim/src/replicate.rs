//! Monte Carlo replicate driver.
//!
//! A replicate is an independent multi-season run; its seed is derived
//! from the master seed and the replicate number, so the set of runs is
//! identical whether they execute sequentially or across a thread pool.
//! `run_replicates` picks the parallel driver when the `parallel` feature
//! is on (the default) and falls back to the sequential one otherwise.

use cola_core::seeding::derive_seed;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::config::SimConfig;
use crate::season::{simulate_season, LeagueState, SeasonRecord};
use crate::SimError;

/// One independent run: `seasons[k]` is the record of season k.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReplicateRun {
    pub replicate: u64,
    pub seed: u64,
    pub seasons: Vec<SeasonRecord>,
}

/// Simulate one replicate from a fresh league.
pub fn run_replicate(
    cfg: &SimConfig,
    n_seasons: usize,
    replicate: u64,
    seed: u64,
) -> Result<ReplicateRun, SimError> {
    let mut state = LeagueState::new(cfg, seed)?;
    let mut seasons = Vec::with_capacity(n_seasons);
    for _ in 0..n_seasons {
        seasons.push(simulate_season(&mut state, cfg)?);
    }
    Ok(ReplicateRun {
        replicate,
        seed,
        seasons,
    })
}

fn replicate_seed(master_seed: u64, replicate: u64) -> u64 {
    derive_seed(master_seed, "replicate", replicate)
}

/// Sequential driver; always available.
pub fn run_replicates_seq(
    cfg: &SimConfig,
    n_seasons: usize,
    n_replicates: usize,
    master_seed: u64,
) -> Result<Vec<ReplicateRun>, SimError> {
    (0..n_replicates as u64)
        .map(|i| run_replicate(cfg, n_seasons, i, replicate_seed(master_seed, i)))
        .collect()
}

/// Parallel driver: replicates fan out over the rayon pool. Seeds are
/// fixed per replicate up front, so output is identical to the
/// sequential driver.
#[cfg(feature = "parallel")]
pub fn run_replicates_par(
    cfg: &SimConfig,
    n_seasons: usize,
    n_replicates: usize,
    master_seed: u64,
) -> Result<Vec<ReplicateRun>, SimError> {
    (0..n_replicates as u64)
        .into_par_iter()
        .map(|i| run_replicate(cfg, n_seasons, i, replicate_seed(master_seed, i)))
        .collect()
}

/// Default driver: parallel when the `parallel` feature is enabled,
/// sequential otherwise. Output does not depend on the choice.
pub fn run_replicates(
    cfg: &SimConfig,
    n_seasons: usize,
    n_replicates: usize,
    master_seed: u64,
) -> Result<Vec<ReplicateRun>, SimError> {
    #[cfg(feature = "parallel")]
    {
        run_replicates_par(cfg, n_seasons, n_replicates, master_seed)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_replicates_seq(cfg, n_seasons, n_replicates, master_seed)
    }
}
