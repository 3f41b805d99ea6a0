//! Survey scoring for deciding where the lottery line moves.
//!
//! A panel of independent experts each picks one of six line options and
//! predicts the distribution of everyone else's picks. Honest answers are
//! rewarded through two channels: a quadratic prediction score (strictly
//! proper, so reporting your true belief maximizes expected score) and an
//! information score that pays for choices that selected peers made too,
//! inversely weighted by how predictable the peer thought that choice was.
//! Half the round budget is split in proportion to each score.
//!
//! The line itself moves to the deepest option that at least half the panel
//! chose at that depth or deeper.

mod line;
mod response;
mod scoring;

pub use line::determine_line;
pub use response::{
    parse_responses, read_responses, validate_and_normalize, SurveyResponse, MIN_AGENTS,
};
pub use scoring::{
    information_score, pair_prediction_score, payments, prediction_score, score_round,
    select_peer_subset, subset_size, AgentScore, RoundScores,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SurveyError {
    #[error("agent {agent}: {message}")]
    Response { agent: String, message: String },

    #[error("round has {n} agents; at least {min} are required")]
    TooFewAgents { n: usize, min: usize },

    #[error("agent {agent}: only {available} non-conflicted peers for a subset of {needed}")]
    InsufficientPeers {
        agent: String,
        available: usize,
        needed: usize,
    },

    #[error("invalid budget: {0}")]
    Budget(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
