//! Where the line moves given a round of choices.

use cola_core::LineLevel;

use crate::response::SurveyResponse;

/// The line moves to the deepest option that at least half the panel chose
/// at that depth or deeper; with no such majority it stays at option 1.
///
/// Scanning from option 6 downward guarantees the result is monotone: any
/// single respondent moving their choice deeper can only grow the
/// at-or-deeper counts, never shrink them.
pub fn determine_line(responses: &[SurveyResponse]) -> LineLevel {
    let n = responses.len();
    let mut counts = [0usize; 7]; // 1-indexed by option
    for r in responses {
        counts[r.choice as usize] += 1;
    }
    let mut at_or_deeper = 0;
    let mut level = 1u8;
    for option in (2..=6u8).rev() {
        at_or_deeper += counts[option as usize];
        if 2 * at_or_deeper >= n {
            level = option;
            break;
        }
    }
    LineLevel::from_option(level).expect("option in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round(choices: &[u8]) -> Vec<SurveyResponse> {
        choices
            .iter()
            .enumerate()
            .map(|(i, c)| SurveyResponse::new(format!("a{i}"), *c, [1.0 / 6.0; 6]))
            .collect()
    }

    #[test]
    fn line_stays_without_a_majority() {
        // 5 of 10 at option 1, rest spread shallow
        assert_eq!(
            determine_line(&round(&[1, 1, 1, 1, 1, 1, 2, 2, 3, 2])),
            LineLevel::NoMove
        );
        assert_eq!(determine_line(&round(&[1; 8])), LineLevel::NoMove);
    }

    #[test]
    fn line_moves_to_deepest_majority_depth() {
        // exactly half at 2-or-deeper moves the line to 2
        assert_eq!(
            determine_line(&round(&[1, 1, 1, 1, 2, 2, 2, 2])),
            LineLevel::IncludeFirstRoundLosers
        );
        // half at 3-or-deeper beats a larger shallow majority
        assert_eq!(
            determine_line(&round(&[1, 1, 1, 1, 3, 3, 4, 3])),
            LineLevel::IncludeSecondRoundLosers
        );
        assert_eq!(determine_line(&round(&[6; 8])), LineLevel::IncludeAll);
        // deep choices below the half threshold do not move the line past
        // the deepest majority depth
        assert_eq!(
            determine_line(&round(&[2, 2, 2, 2, 2, 6, 6, 6])),
            LineLevel::IncludeFirstRoundLosers
        );
    }

    #[test]
    fn single_deeper_move_never_retreats_the_line() {
        // exhaustive over small rounds: bump one choice one level deeper
        let base = [1u8, 2, 2, 3, 1, 4, 2, 1];
        let before = determine_line(&round(&base));
        for i in 0..base.len() {
            if base[i] == 6 {
                continue;
            }
            let mut bumped = base;
            bumped[i] += 1;
            let after = determine_line(&round(&bumped));
            assert!(after >= before, "bumping agent {i} moved line shallower");
        }
    }
}
