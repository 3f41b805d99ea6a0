//! Survey responses: parsing, validation, normalization.

use std::collections::BTreeSet;
use std::path::Path;

use crate::SurveyError;

/// Minimum panel size for a scoreable round.
pub const MIN_AGENTS: usize = 8;

/// Per-component floor for reported predictions. Keeps the information
/// score's reciprocal bounded (at 1000).
pub const PREDICTION_FLOOR: f64 = 0.001;

/// Sums within this of 1.0 are accepted verbatim.
const SUM_EXACT_TOL: f64 = 1e-9;
/// Sums within this of 1.0 are renormalized; anything further is rejected.
const SUM_RENORM_TOL: f64 = 1e-6;

/// One expert's submission: a chosen line option and a prediction of how
/// the rest of the panel distributes over the six options.
#[derive(Debug, Clone, PartialEq)]
pub struct SurveyResponse {
    pub agent: String,
    /// Agents sharing a conflict group are never sampled as peers for each
    /// other's information score. `None` means unaffiliated.
    pub conflict_group: Option<String>,
    /// Chosen line option, 1-6.
    pub choice: u8,
    /// Predicted share of the panel choosing each option.
    pub prediction: [f64; 6],
}

impl SurveyResponse {
    pub fn new(agent: impl Into<String>, choice: u8, prediction: [f64; 6]) -> Self {
        SurveyResponse {
            agent: agent.into(),
            conflict_group: None,
            choice,
            prediction,
        }
    }

    pub fn with_conflict_group(mut self, group: impl Into<String>) -> Self {
        self.conflict_group = Some(group.into());
        self
    }

    pub fn conflicts_with(&self, other: &SurveyResponse) -> bool {
        match (&self.conflict_group, &other.conflict_group) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// Enforce choice range, the component floor, and the simplex constraint,
    /// renormalizing small drift in place.
    pub fn validate_and_normalize_one(&mut self) -> Result<(), SurveyError> {
        let fail = |message: String| SurveyError::Response {
            agent: self.agent.clone(),
            message,
        };
        if !(1..=6).contains(&self.choice) {
            return Err(fail(format!("choice must be 1..=6, got {}", self.choice)));
        }
        for (i, p) in self.prediction.iter().enumerate() {
            if !p.is_finite() {
                return Err(fail(format!("prediction component {} is not finite", i + 1)));
            }
            if *p < PREDICTION_FLOOR - 1e-12 {
                return Err(fail(format!(
                    "prediction component {} is {p}, below the {PREDICTION_FLOOR} floor",
                    i + 1
                )));
            }
        }
        let sum: f64 = self.prediction.iter().sum();
        if (sum - 1.0).abs() <= SUM_EXACT_TOL {
            return Ok(());
        }
        if (sum - 1.0).abs() <= SUM_RENORM_TOL {
            for p in &mut self.prediction {
                *p /= sum;
            }
            return Ok(());
        }
        Err(fail(format!("prediction sums to {sum}, not 1")))
    }
}

/// Validate a whole round in place: per-response checks, distinct agent ids,
/// and the minimum panel size.
pub fn validate_and_normalize(responses: &mut [SurveyResponse]) -> Result<(), SurveyError> {
    if responses.len() < MIN_AGENTS {
        return Err(SurveyError::TooFewAgents {
            n: responses.len(),
            min: MIN_AGENTS,
        });
    }
    let mut seen = BTreeSet::new();
    for r in responses.iter_mut() {
        r.validate_and_normalize_one()?;
        if !seen.insert(r.agent.clone()) {
            return Err(SurveyError::Response {
                agent: r.agent.clone(),
                message: "agent id appears twice in the round".into(),
            });
        }
    }
    Ok(())
}

/// Parse `AGENT GROUP CHOICE P1 P2 P3 P4 P5 P6` lines; `-` marks no conflict
/// group, `#` starts a comment.
pub fn parse_responses(text: &str) -> Result<Vec<SurveyResponse>, SurveyError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let payload = raw.split('#').next().unwrap_or("").trim();
        if payload.is_empty() {
            continue;
        }
        let fields: Vec<&str> = payload.split_whitespace().collect();
        if fields.len() != 9 {
            return Err(SurveyError::Parse {
                line,
                message: format!(
                    "expected `AGENT GROUP CHOICE P1..P6` (9 fields), got {}",
                    fields.len()
                ),
            });
        }
        let choice: u8 = fields[2].parse().map_err(|e| SurveyError::Parse {
            line,
            message: format!("bad choice `{}`: {e}", fields[2]),
        })?;
        let mut prediction = [0.0; 6];
        for (k, tok) in fields[3..].iter().enumerate() {
            prediction[k] = tok.parse().map_err(|e| SurveyError::Parse {
                line,
                message: format!("bad probability `{tok}`: {e}"),
            })?;
        }
        let mut r = SurveyResponse::new(fields[0], choice, prediction);
        if fields[1] != "-" {
            r.conflict_group = Some(fields[1].to_string());
        }
        out.push(r);
    }
    Ok(out)
}

pub fn read_responses(path: &Path) -> Result<Vec<SurveyResponse>, SurveyError> {
    parse_responses(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniformish() -> [f64; 6] {
        [1.0 / 6.0; 6]
    }

    #[test]
    fn accepts_exact_and_renormalizes_drift() {
        let mut r = SurveyResponse::new("a", 1, uniformish());
        r.validate_and_normalize_one().unwrap();

        // small drift gets pulled back onto the simplex
        let mut r = SurveyResponse::new("a", 1, [0.2, 0.2, 0.2, 0.2, 0.1, 0.1000004]);
        r.validate_and_normalize_one().unwrap();
        assert!((r.prediction.iter().sum::<f64>() - 1.0).abs() <= 1e-12);

        // large drift is rejected
        let mut r = SurveyResponse::new("a", 1, [0.2, 0.2, 0.2, 0.2, 0.1, 0.2]);
        assert!(r.validate_and_normalize_one().is_err());
    }

    #[test]
    fn enforces_floor_and_choice_range() {
        let mut r = SurveyResponse::new("a", 1, [0.9995, 0.0001, 0.0001, 0.0001, 0.0001, 0.0001]);
        assert!(r.validate_and_normalize_one().is_err(), "below floor");
        let mut r = SurveyResponse::new("a", 0, uniformish());
        assert!(r.validate_and_normalize_one().is_err(), "choice 0");
        let mut r = SurveyResponse::new("a", 7, uniformish());
        assert!(r.validate_and_normalize_one().is_err(), "choice 7");
        // the canonical near-certain report is fine
        let mut r = SurveyResponse::new("a", 1, [0.995, 0.001, 0.001, 0.001, 0.001, 0.001]);
        r.validate_and_normalize_one().unwrap();
    }

    #[test]
    fn round_validation_checks_size_and_duplicates() {
        let mut round: Vec<SurveyResponse> = (0..7)
            .map(|i| SurveyResponse::new(format!("a{i}"), 1, uniformish()))
            .collect();
        assert!(matches!(
            validate_and_normalize(&mut round),
            Err(SurveyError::TooFewAgents { n: 7, min: 8 })
        ));
        let mut round: Vec<SurveyResponse> = (0..8)
            .map(|i| SurveyResponse::new(format!("a{}", i / 2), 1, uniformish()))
            .collect();
        assert!(validate_and_normalize(&mut round).is_err());
    }

    #[test]
    fn parses_the_line_format() {
        let text = "\
# agent group choice p1 p2 p3 p4 p5 p6
alice - 2 0.1 0.5 0.1 0.1 0.1 0.1
bob newsdesk 1 0.4 0.2 0.1 0.1 0.1 0.1
";
        let rs = parse_responses(text).unwrap();
        assert_eq!(rs.len(), 2);
        assert_eq!(rs[0].agent, "alice");
        assert_eq!(rs[0].conflict_group, None);
        assert_eq!(rs[1].conflict_group.as_deref(), Some("newsdesk"));
        assert_eq!(rs[1].choice, 1);
        assert!(parse_responses("alice - 2 0.1 0.5\n").is_err());
        assert!(parse_responses("alice - x 0.1 0.5 0.1 0.1 0.1 0.1\n").is_err());
    }
}
