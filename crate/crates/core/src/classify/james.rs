//! Screening of the low-dimensional Specht modules of rank `n` against the
//! families that may occur in the Cohen-Wales space.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::specht::{q_membership, screen_low_dim, Partition, SpechtLabel};

use super::table::RowKind;
use super::ClassifyError;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ScreenStatus {
    /// A constituent of one of the table rows.
    TableFamily { kind: RowKind },
    /// A family member shown not to occur.
    Excluded { reason: String },
    /// A conjugate of a family member, absent from the list of possible
    /// constituents.
    ConjugateOnly,
    /// `S^{(0),λ}` outside the families, with `λ ∈ Q_n(level) \ Q_n(level-1)`.
    Exception { level: u32 },
    /// A label with a nonempty first component outside the families.
    Other,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ScreenEntry {
    pub label: SpechtLabel,
    pub dim: u128,
    #[serde(flatten)]
    pub status: ScreenStatus,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct JamesScreen {
    pub n: u32,
    pub bound: u128,
    pub entries: Vec<ScreenEntry>,
    pub exceptions_by_level: BTreeMap<u32, Vec<SpechtLabel>>,
    pub other_exceptions: Vec<SpechtLabel>,
}

impl JamesScreen {
    pub fn surviving_dims(&self) -> Vec<u128> {
        let mut d: Vec<u128> = self
            .entries
            .iter()
            .filter(|e| matches!(e.status, ScreenStatus::TableFamily { .. }))
            .map(|e| e.dim)
            .collect();
        d.sort();
        d.dedup();
        d
    }

    pub fn exceptions_at(&self, level: u32) -> Vec<SpechtLabel> {
        self.exceptions_by_level
            .get(&level)
            .cloned()
            .unwrap_or_default()
    }
}

fn part(parts: Vec<u32>) -> Partition {
    Partition::new(parts).expect("valid partition")
}

/// `(a, b)` with `b` given by parts, expanding an equal pair into its split
/// labels.
fn labels(a: Vec<u32>, b: Vec<u32>) -> Vec<SpechtLabel> {
    SpechtLabel::pair_or_split(part(a), part(b))
}

fn ones(k: u32) -> Vec<u32> {
    vec![1; k as usize]
}

const NOT_OCCUR: &str = "shown not to occur in the Cohen-Wales space";

/// Family members shown not to occur, with the reason.
fn exclusions(n: u32) -> Vec<(Vec<SpechtLabel>, &'static str)> {
    let mut out = vec![(labels(vec![], vec![n - 2, 1, 1]), NOT_OCCUR)];
    if n == 4 {
        out.push((labels(vec![1, 1], vec![2]), NOT_OCCUR));
        out.push((labels(vec![1, 1], vec![1, 1]), NOT_OCCUR));
        out.push((labels(vec![2], vec![1, 1]), NOT_OCCUR));
    } else {
        out.push((
            labels(vec![1, 1], vec![n - 2]),
            "shown not to occur; S^{(2),(n-2)} is the constituent of dimension n(n-1)/2",
        ));
        out.push((labels(vec![1, 1], ones(n - 2)), NOT_OCCUR));
        out.push((labels(vec![2], ones(n - 2)), NOT_OCCUR));
        let mut hook = vec![2];
        hook.extend(ones(n - 3));
        out.push((labels(vec![1], hook), NOT_OCCUR));
        let mut tail = vec![3];
        tail.extend(ones(n - 3));
        out.push((labels(vec![], tail), NOT_OCCUR));
    }
    out
}

/// All family members, without status.
fn family_members(n: u32) -> Vec<SpechtLabel> {
    let mut out = Vec::new();
    for (a, b) in [
        (vec![], vec![n]),
        (vec![], vec![n - 1, 1]),
        (vec![], vec![n - 2, 2]),
        (vec![], vec![n - 2, 1, 1]),
        (vec![1], vec![n - 1]),
        (vec![1], vec![n - 2, 1]),
        (vec![2], vec![n - 2]),
        (vec![1, 1], vec![n - 2]),
    ] {
        out.extend(labels(a, b));
    }
    out
}

/// Smallest `m` with `λ ∈ Q_n(m)`.
fn q_level(lambda: &Partition) -> u32 {
    (0..=lambda.size())
        .find(|&m| q_membership(lambda, m))
        .expect("Q_n(n) holds")
}

pub fn james_screen(n: u32) -> Result<JamesScreen, ClassifyError> {
    if n < 4 {
        return Err(ClassifyError::RankTooSmall(n));
    }
    let bound = (n as u128) * (n as u128 - 1);
    let mut status: BTreeMap<SpechtLabel, ScreenStatus> = BTreeMap::new();
    for kind in RowKind::ALL {
        for l in kind.labels(n) {
            status
                .entry(l)
                .or_insert(ScreenStatus::TableFamily { kind });
        }
    }
    for (ls, reason) in exclusions(n) {
        for l in ls {
            status.entry(l).or_insert(ScreenStatus::Excluded {
                reason: reason.to_string(),
            });
        }
    }
    for l in family_members(n) {
        for c in l.conjugates() {
            status.entry(c).or_insert(ScreenStatus::ConjugateOnly);
        }
    }

    let mut entries = Vec::new();
    let mut exceptions_by_level: BTreeMap<u32, Vec<SpechtLabel>> = BTreeMap::new();
    let mut other_exceptions = Vec::new();
    for (label, dim) in screen_low_dim(n, bound) {
        let status = match status.get(&label) {
            Some(s) => s.clone(),
            None if label.first().is_empty() => {
                let level = q_level(label.second());
                exceptions_by_level
                    .entry(level)
                    .or_default()
                    .push(label.clone());
                ScreenStatus::Exception { level }
            }
            None => {
                other_exceptions.push(label.clone());
                ScreenStatus::Other
            }
        };
        entries.push(ScreenEntry { label, dim, status });
    }
    for v in exceptions_by_level.values_mut() {
        v.sort();
    }
    other_exceptions.sort();
    Ok(JamesScreen {
        n,
        bound,
        entries,
        exceptions_by_level,
        other_exceptions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zero(parts: &[u32]) -> SpechtLabel {
        SpechtLabel::zero(part(parts.to_vec()))
    }

    #[test]
    fn rank_eleven_dimensions() {
        let s = james_screen(11).unwrap();
        assert_eq!(s.surviving_dims(), vec![1, 10, 11, 44, 55, 99]);
        assert!(s.exceptions_at(3).is_empty());
        assert!(s.other_exceptions.is_empty());
    }

    #[test]
    fn rank_nine_and_ten_level_three() {
        let mut nine = vec![
            zero(&[6, 3]),
            zero(&[2, 2, 2, 1, 1, 1]),
            zero(&[6, 1, 1, 1]),
            zero(&[4, 1, 1, 1, 1, 1]),
        ];
        nine.sort();
        assert_eq!(james_screen(9).unwrap().exceptions_at(3), nine);
        let mut ten = vec![
            zero(&[7, 3]),
            zero(&[2, 2, 2, 1, 1, 1, 1]),
            zero(&[7, 1, 1, 1]),
            zero(&[4, 1, 1, 1, 1, 1, 1]),
        ];
        ten.sort();
        assert_eq!(james_screen(10).unwrap().exceptions_at(3), ten);
    }

    #[test]
    fn rank_eight_level_four() {
        let s = james_screen(8).unwrap();
        let four = s.exceptions_at(4);
        assert!(four.contains(&zero(&[4, 4])) && four.contains(&zero(&[2, 2, 2, 2])));
        assert!(four.iter().all(|l| l.dim() == 14));
    }

    #[test]
    fn rank_four_statuses() {
        let s = james_screen(4).unwrap();
        let find = |l: &SpechtLabel| {
            s.entries
                .iter()
                .find(|e| &e.label == l)
                .map(|e| e.status.clone())
        };
        assert_eq!(
            find(&zero(&[3, 1])),
            Some(ScreenStatus::TableFamily {
                kind: RowKind::Reflection
            })
        );
        assert!(matches!(
            find(&SpechtLabel::of(&[1, 1], &[2])),
            Some(ScreenStatus::Excluded { .. })
        ));
        assert!(matches!(
            find(&zero(&[1, 1, 1, 1])),
            Some(ScreenStatus::ConjugateOnly)
        ));
    }
}
