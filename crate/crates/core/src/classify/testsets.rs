//! Reference data for regression: restriction identities and the
//! low-rank candidates that the classification has to rule out.

use serde::Serialize;

use crate::specht::{BranchingMultiset, SpechtLabel};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BranchingCase {
    pub label: SpechtLabel,
    pub steps: u32,
    pub expected: BranchingMultiset,
}

fn lab(s: &str) -> SpechtLabel {
    s.parse().expect("valid label literal")
}

fn case(label: &str, steps: u32, expected: &[(&str, u64)]) -> BranchingCase {
    BranchingCase {
        label: lab(label),
        steps,
        expected: BranchingMultiset::from_pairs(expected.iter().map(|&(l, k)| (lab(l), k))),
    }
}

/// Restriction identities with their expected decompositions.
pub fn branching_testset() -> Vec<BranchingCase> {
    vec![
        case(
            "((2),(1,1,1,1))",
            1,
            &[("((1),(1,1,1,1))", 1), ("((2),(1,1,1))", 1)],
        ),
        case(
            "((),(5,3))",
            3,
            &[("((),(3,2))", 3), ("((),(4,1))", 3), ("((),(5))", 1)],
        ),
        case(
            "((),(2,2,2,1,1))",
            2,
            &[
                ("((),(2,2,1,1))", 2),
                ("((),(2,2,2))", 1),
                ("((),(2,1,1,1,1))", 1),
            ],
        ),
        case("((1),(2,2))", 1, &[("((),(2,2))", 1), ("((1),(2,1))", 1)]),
        case("((1,1),(3))", 1, &[("((1),(3))", 1), ("((1,1),(2))", 1)]),
        case("((1,1),(4))", 1, &[("((1,1),(3))", 1), ("((1),(4))", 1)]),
        case("((1,1),(5))", 1, &[("((1),(5))", 1), ("((1,1),(4))", 1)]),
        case(
            "((1),(3,2))",
            1,
            &[("((),(3,2))", 1), ("((1),(2,2))", 1), ("((1),(3,1))", 1)],
        ),
        case(
            "((3),(1,1,1))",
            2,
            &[("((1),(1,1,1))", 1), ("((2),(1,1))", 2), ("((1),(3))", 1)],
        ),
        case(
            "((1,1,1),(1,1,1))+",
            2,
            &[
                ("((1,1),(1,1))+", 1),
                ("((1,1),(1,1))-", 1),
                ("((1),(1,1,1))", 1),
            ],
        ),
        case(
            "((3),(4))",
            1,
            &[("((3),(3))+", 1), ("((3),(3))-", 1), ("((2),(4))", 1)],
        ),
    ]
}

/// A group of labels sharing a dimension, all living at rank `rank`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Candidate {
    /// Size of the first component.
    pub k: u32,
    pub labels: Vec<SpechtLabel>,
    pub dim: u128,
    pub rank: u32,
}

/// Specht modules left to exclude in the last step of the classification
/// at ranks six to ten, grouped with their conjugates.
pub fn final_stage_candidates() -> Vec<Candidate> {
    let c = |k: u32, labels: &[&str], dim: u128, rank: u32| Candidate {
        k,
        labels: labels.iter().map(|s| lab(s)).collect(),
        dim,
        rank,
    };
    vec![
        c(0, &["((),(3,2,1))"], 16, 6),
        c(0, &["((),(4,2,1))", "((),(3,2,1,1))"], 35, 7),
        c(0, &["((),(6,3))", "((),(2,2,2,1,1,1))"], 48, 9),
        c(0, &["((),(7,3))", "((),(2,2,2,1,1,1,1))"], 75, 10),
        c(0, &["((),(4,1,1,1))"], 20, 7),
        c(0, &["((),(5,1,1,1))", "((),(4,1,1,1,1))"], 35, 8),
        c(0, &["((),(6,1,1,1))", "((),(4,1,1,1,1,1))"], 56, 9),
        c(0, &["((),(7,1,1,1))", "((),(4,1,1,1,1,1,1))"], 84, 10),
        c(1, &["((1),(3,3))", "((1),(2,2,2))"], 35, 7),
        c(3, &["((3),(1,1,1))"], 20, 6),
        c(3, &["((3),(3))+", "((1,1,1),(1,1,1))+"], 10, 6),
        c(3, &["((3),(3))-", "((1,1,1),(1,1,1))-"], 10, 6),
        c(3, &["((3),(4))", "((1,1,1),(1,1,1,1))"], 35, 7),
        c(3, &["((3),(1,1,1,1))", "((1,1,1),(4))"], 35, 7),
        c(4, &["((4),(4))+", "((1,1,1,1),(1,1,1,1))+"], 35, 8),
        c(4, &["((4),(4))-", "((1,1,1,1),(1,1,1,1))-"], 35, 8),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specht::restrict_multi;

    #[test]
    fn branching_cases_hold() {
        for c in branching_testset() {
            assert_eq!(
                restrict_multi(&c.label, c.steps).unwrap(),
                c.expected,
                "{}",
                c.label
            );
        }
    }

    #[test]
    fn candidate_dimensions() {
        for c in final_stage_candidates() {
            for l in &c.labels {
                assert_eq!(l.dim(), c.dim, "{l}");
                assert_eq!(l.n(), c.rank, "{l}");
                assert_eq!(l.first().size(), c.k, "{l}");
            }
        }
    }
}
