//! Error-to-exit-code mapping.
//!
//! The executable's contract: 0 success, 1 reference mismatch, 2 file or
//! config trouble, 3 domain validation failure. Reference mismatches are
//! ordinary results (not errors); everything else funnels through
//! `CliError`, which pins the right exit code at the point the error is
//! classified.

use cola_core::MechanismError;
use cola_experiments::ExperimentError;
use cola_rbts::SurveyError;
use cola_sim::SimError;
use cola_transition::TransitionError;

/// Exit code for files that fail to read or parse, and bad configs.
pub const EXIT_CONFIG: u8 = 2;
/// Exit code for inputs that parse but violate domain rules.
pub const EXIT_VALIDATION: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn config(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_CONFIG,
            message: message.into(),
        }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::config(e.to_string())
    }
}

impl From<MechanismError> for CliError {
    fn from(e: MechanismError) -> Self {
        let code = match &e {
            MechanismError::Config(_) | MechanismError::Parse { .. } | MechanismError::Io(_) => {
                EXIT_CONFIG
            }
            MechanismError::Argument(_)
            | MechanismError::EmptyLottery
            | MechanismError::InsufficientEntrants { .. } => EXIT_VALIDATION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<TransitionError> for CliError {
    fn from(e: TransitionError) -> Self {
        match e {
            TransitionError::Mechanism(inner) => inner.into(),
            TransitionError::Parse { .. } | TransitionError::Io(_) => {
                CliError::config(e.to_string())
            }
            TransitionError::Season { .. }
            | TransitionError::EmptyLog
            | TransitionError::TeamSetMismatch { .. } => CliError::validation(e.to_string()),
        }
    }
}

impl From<SurveyError> for CliError {
    fn from(e: SurveyError) -> Self {
        match &e {
            SurveyError::Parse { .. } | SurveyError::Io(_) => CliError::config(e.to_string()),
            SurveyError::Response { .. }
            | SurveyError::TooFewAgents { .. }
            | SurveyError::InsufficientPeers { .. }
            | SurveyError::Budget(_) => CliError::validation(e.to_string()),
        }
    }
}

impl From<SimError> for CliError {
    fn from(e: SimError) -> Self {
        match e {
            SimError::Config(_) => CliError::config(e.to_string()),
            SimError::Mechanism(inner) => inner.into(),
        }
    }
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        match e {
            ExperimentError::Sim(inner) => inner.into(),
            ExperimentError::Io(inner) => inner.into(),
            ExperimentError::Argument(_) => CliError::validation(e.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_follow_error_class() {
        let parse: CliError = MechanismError::Parse {
            line: 3,
            message: "bad".to_string(),
        }
        .into();
        assert_eq!(parse.code, EXIT_CONFIG);

        let domain: CliError = MechanismError::EmptyLottery.into();
        assert_eq!(domain.code, EXIT_VALIDATION);

        let nested: CliError = TransitionError::Mechanism(MechanismError::Config(
            "alpha must be positive".to_string(),
        ))
        .into();
        assert_eq!(nested.code, EXIT_CONFIG);

        let sim: CliError = SimError::Config("n_teams".to_string()).into();
        assert_eq!(sim.code, EXIT_CONFIG);
    }
}
