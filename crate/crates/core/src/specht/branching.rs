use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::label::SpechtLabel;
use super::SpechtError;

/// A multiset of labels of a common rank with positive multiplicities.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BranchingMultiset {
    entries: BTreeMap<SpechtLabel, u64>,
}

impl BranchingMultiset {
    pub fn new() -> Self {
        BranchingMultiset::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (SpechtLabel, u64)>>(pairs: I) -> Self {
        let mut m = BranchingMultiset::new();
        for (l, k) in pairs {
            m.add(l, k);
        }
        m
    }

    pub fn add(&mut self, label: SpechtLabel, mult: u64) {
        if mult > 0 {
            *self.entries.entry(label).or_insert(0) += mult;
        }
    }

    pub fn entries(&self) -> &BTreeMap<SpechtLabel, u64> {
        &self.entries
    }

    pub fn multiplicity(&self, label: &SpechtLabel) -> u64 {
        self.entries.get(label).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ multiplicity · dim`.
    pub fn total_dim(&self) -> u128 {
        self.entries.iter().map(|(l, &k)| k as u128 * l.dim()).sum()
    }
}

impl fmt::Display for BranchingMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .entries
            .iter()
            .map(|(l, &k)| {
                if k == 1 {
                    l.to_string()
                } else {
                    format!("{k}*{l}")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// One-step restriction from rank `n` to rank `n - 1`.
pub fn restrict(s: &SpechtLabel) -> Result<BranchingMultiset, SpechtError> {
    let n = s.n();
    if n <= 4 {
        return Err(SpechtError::RankTooSmall { n, steps: 1 });
    }
    let mut out = BranchingMultiset::new();
    let (a, b) = (s.first(), s.second());
    if s.is_split() {
        for i in a.removable_rows() {
            out.add(
                SpechtLabel::new(a.remove_box(i), a.clone()).expect("components differ"),
                1,
            );
        }
        return Ok(out);
    }
    for i in a.removable_rows() {
        for l in SpechtLabel::pair_or_split(a.remove_box(i), b.clone()) {
            out.add(l, 1);
        }
    }
    for i in b.removable_rows() {
        for l in SpechtLabel::pair_or_split(a.clone(), b.remove_box(i)) {
            out.add(l, 1);
        }
    }
    Ok(out)
}

/// `steps` successive restrictions, multiplicities counting branching paths.
pub fn restrict_multi(s: &SpechtLabel, steps: u32) -> Result<BranchingMultiset, SpechtError> {
    let n = s.n();
    if steps == 0 || n < steps + 4 {
        return Err(SpechtError::RankTooSmall { n, steps });
    }
    let mut cur = BranchingMultiset::from_pairs([(s.clone(), 1)]);
    for _ in 0..steps {
        let mut next = BranchingMultiset::new();
        for (l, &k) in cur.entries() {
            for (m, &j) in restrict(l)?.entries() {
                next.add(m.clone(), k * j);
            }
        }
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(s: &str) -> SpechtLabel {
        s.parse().unwrap()
    }

    #[test]
    fn single_step_examples() {
        let r = restrict(&lab("((1,1),(4))")).unwrap();
        assert_eq!(
            r,
            BranchingMultiset::from_pairs([(lab("((1),(4))"), 1), (lab("((1,1),(3))"), 1)])
        );
        let r = restrict(&lab("((3),(4))")).unwrap();
        assert_eq!(
            r,
            BranchingMultiset::from_pairs([
                (lab("((3),(3))+"), 1),
                (lab("((3),(3))-"), 1),
                (lab("((2),(4))"), 1)
            ])
        );
        assert_eq!(restrict(&lab("((),(6))")).unwrap().to_string(), "((),(5))");
    }

    #[test]
    fn split_restriction() {
        let r = restrict(&lab("((1,1,1),(1,1,1))+")).unwrap();
        assert_eq!(
            r,
            BranchingMultiset::from_pairs([(lab("((1,1),(1,1,1))"), 1)])
        );
    }

    #[test]
    fn rank_guard() {
        assert!(restrict(&lab("((1),(3))")).is_err());
        assert!(restrict_multi(&lab("((),(6))"), 3).is_err());
        assert!(restrict_multi(&lab("((),(6))"), 0).is_err());
        assert!(restrict_multi(&lab("((),(6))"), 2).is_ok());
    }
}
