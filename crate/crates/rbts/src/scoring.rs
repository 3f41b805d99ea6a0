//! Prediction scores, information scores, and the budget split.

use cola_core::seeding::derive_rng;
use cola_core::LineLevel;
use rand::Rng;

use crate::line::determine_line;
use crate::response::{validate_and_normalize, SurveyResponse};
use crate::SurveyError;

/// Quadratic score for one prediction against one observed peer choice:
/// `1/2 + y(x) - 1/2 * sum_i y(i)^2`. Strictly proper: the expected score
/// under any belief is maximized by reporting that belief.
pub fn pair_prediction_score(prediction: &[f64; 6], peer_choice: u8) -> f64 {
    let sq: f64 = prediction.iter().map(|y| y * y).sum();
    0.5 + prediction[(peer_choice - 1) as usize] - 0.5 * sq
}

/// Mean pair score of `agent`'s prediction against every other respondent.
pub fn prediction_score(agent: usize, responses: &[SurveyResponse]) -> f64 {
    let me = &responses[agent];
    let others = responses.len() - 1;
    let total: f64 = responses
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != agent)
        .map(|(_, peer)| pair_prediction_score(&me.prediction, peer.choice))
        .sum();
    total / others as f64
}

/// Peer-subset size: one quarter of the panel, rounded half-up, at least 1.
pub fn subset_size(n: usize) -> usize {
    ((n as f64 / 4.0 + 0.5).floor() as usize).max(1)
}

/// Draw the agent's information-score peer subset: uniform among the other
/// respondents that share no conflict group with the agent.
pub fn select_peer_subset(
    agent: usize,
    responses: &[SurveyResponse],
    rng: &mut impl Rng,
) -> Result<Vec<usize>, SurveyError> {
    let me = &responses[agent];
    let pool: Vec<usize> = responses
        .iter()
        .enumerate()
        .filter(|(j, peer)| *j != agent && !me.conflicts_with(peer))
        .map(|(j, _)| j)
        .collect();
    let needed = subset_size(responses.len());
    if pool.len() < needed {
        return Err(SurveyError::InsufficientPeers {
            agent: me.agent.clone(),
            available: pool.len(),
            needed,
        });
    }
    let mut picked: Vec<usize> = rand::seq::index::sample(rng, pool.len(), needed)
        .into_iter()
        .map(|k| pool[k])
        .collect();
    picked.sort_unstable();
    Ok(picked)
}

/// Mean surprisal credit over the subset: a selected peer who made the same
/// choice contributes the reciprocal of the probability that peer assigned
/// to it; everyone else contributes zero. The prediction floor caps each
/// term at 1000.
pub fn information_score(agent: usize, subset: &[usize], responses: &[SurveyResponse]) -> f64 {
    let me = &responses[agent];
    let slot = (me.choice - 1) as usize;
    let total: f64 = subset
        .iter()
        .map(|&j| {
            let peer = &responses[j];
            if peer.choice == me.choice {
                1.0 / peer.prediction[slot]
            } else {
                0.0
            }
        })
        .sum();
    total / subset.len() as f64
}

/// Split the budget: half pro-rata over prediction scores, half pro-rata
/// over information scores. A channel whose scores sum to zero is split
/// evenly instead.
pub fn payments(
    prediction_scores: &[f64],
    information_scores: &[f64],
    budget: f64,
) -> Result<Vec<f64>, SurveyError> {
    if !budget.is_finite() || budget < 0.0 {
        return Err(SurveyError::Budget(format!(
            "budget must be a finite non-negative amount, got {budget}"
        )));
    }
    let n = prediction_scores.len();
    assert_eq!(n, information_scores.len());
    let half = budget / 2.0;
    let share = |scores: &[f64]| -> Vec<f64> {
        let total: f64 = scores.iter().sum();
        if total > 0.0 {
            scores.iter().map(|s| s / total * half).collect()
        } else {
            vec![half / n as f64; n]
        }
    };
    let pred = share(prediction_scores);
    let info = share(information_scores);
    Ok(pred.iter().zip(&info).map(|(a, b)| a + b).collect())
}

/// One agent's scored round.
#[derive(Debug, Clone, PartialEq)]
pub struct AgentScore {
    pub agent: String,
    pub choice: u8,
    pub prediction_score: f64,
    pub information_score: f64,
    pub payment: f64,
}

/// A fully scored survey round.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundScores {
    pub line: LineLevel,
    pub agents: Vec<AgentScore>,
}

/// Score a whole round: validate, compute both scores per agent (peer
/// subsets drawn from per-agent streams derived from `seed`), split the
/// budget, and determine where the line moves.
pub fn score_round(
    responses: &mut [SurveyResponse],
    budget: f64,
    seed: u64,
) -> Result<RoundScores, SurveyError> {
    validate_and_normalize(responses)?;
    let line = determine_line(responses);

    let mut pred_scores = Vec::with_capacity(responses.len());
    let mut info_scores = Vec::with_capacity(responses.len());
    for agent in 0..responses.len() {
        pred_scores.push(prediction_score(agent, responses));
        let mut rng = derive_rng(seed, "peer-subset", agent as u64);
        let subset = select_peer_subset(agent, responses, &mut rng)?;
        info_scores.push(information_score(agent, &subset, responses));
    }
    let paid = payments(&pred_scores, &info_scores, budget)?;

    let agents = responses
        .iter()
        .enumerate()
        .map(|(i, r)| AgentScore {
            agent: r.agent.clone(),
            choice: r.choice,
            prediction_score: pred_scores[i],
            information_score: info_scores[i],
            payment: paid[i],
        })
        .collect();
    Ok(RoundScores { line, agents })
}
