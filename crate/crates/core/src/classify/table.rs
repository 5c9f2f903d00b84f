use serde::Serialize;

use crate::arith::SignedMonomial;
use crate::specht::{Partition, SpechtLabel};

use super::ClassifyError;

/// The six families of constituents of the Cohen-Wales space.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowKind {
    /// `S^{(0),(n)}`
    Trivial,
    /// `S^{(0),(n-1,1)}`
    Reflection,
    /// `S^{(1),(n-1)}`
    Natural,
    /// `S^{(0),(n-2,2)}`
    TwoRow,
    /// `S^{(2),(n-2)}`; split into `S^{(2,2)±}` at `n = 4`.
    Symmetric,
    /// `S^{(1),(n-2,1)}`
    Mixed,
}

impl RowKind {
    pub const ALL: [RowKind; 6] = [
        RowKind::Trivial,
        RowKind::Reflection,
        RowKind::Natural,
        RowKind::TwoRow,
        RowKind::Symmetric,
        RowKind::Mixed,
    ];

    /// The reducibility value of `l` for this family at rank `n`.
    pub fn l_value(self, n: u32) -> SignedMonomial {
        let n = n as i64;
        match self {
            RowKind::Trivial => SignedMonomial::plus(7 - 4 * n),
            RowKind::Reflection => SignedMonomial::plus(7 - 2 * n),
            RowKind::Natural => SignedMonomial::minus(5 - 2 * n),
            RowKind::TwoRow => SignedMonomial::plus(3),
            RowKind::Symmetric => SignedMonomial::plus(-1),
            RowKind::Mixed => SignedMonomial::minus(3),
        }
    }

    pub fn labels(self, n: u32) -> Vec<SpechtLabel> {
        let p = |parts: &[u32]| Partition::new(parts.to_vec()).expect("valid partition");
        match self {
            RowKind::Trivial => vec![SpechtLabel::zero(p(&[n]))],
            RowKind::Reflection => vec![SpechtLabel::zero(p(&[n - 1, 1]))],
            RowKind::Natural => SpechtLabel::pair_or_split(p(&[1]), p(&[n - 1])),
            RowKind::TwoRow => vec![SpechtLabel::zero(p(&[n - 2, 2]))],
            RowKind::Symmetric => SpechtLabel::pair_or_split(p(&[2]), p(&[n - 2])),
            RowKind::Mixed => SpechtLabel::pair_or_split(p(&[1]), p(&[n - 2, 1])),
        }
    }

    /// Closed form of the dimension at rank `n`.
    pub fn closed_form_dim(self, n: u32) -> u128 {
        let n = n as u128;
        match self {
            RowKind::Trivial => 1,
            RowKind::Reflection => n - 1,
            RowKind::Natural => n,
            RowKind::TwoRow => n * (n - 3) / 2,
            RowKind::Symmetric => n * (n - 1) / 2,
            RowKind::Mixed => n * (n - 2),
        }
    }
}

/// One row of the table: `l = l_value` gives a proper invariant subspace
/// isomorphic to the sum of `labels`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ReducibilityCondition {
    pub kind: RowKind,
    pub l: SignedMonomial,
    pub labels: Vec<SpechtLabel>,
    pub dim: u128,
}

/// Rows for rank `n`. At `n = 4` the rows come in the order of the rank-4
/// statement, with the two rows sharing `l = 1/r` last.
pub fn reducibility_table(n: u32) -> Result<Vec<ReducibilityCondition>, ClassifyError> {
    if n < 4 {
        return Err(ClassifyError::RankTooSmall(n));
    }
    let order = if n == 4 {
        [
            RowKind::Trivial,
            RowKind::TwoRow,
            RowKind::Natural,
            RowKind::Mixed,
            RowKind::Reflection,
            RowKind::Symmetric,
        ]
    } else {
        RowKind::ALL
    };
    Ok(order
        .into_iter()
        .map(|kind| {
            let labels = kind.labels(n);
            let dim = labels.iter().map(SpechtLabel::dim).sum();
            ReducibilityCondition {
                kind,
                l: kind.l_value(n),
                labels,
                dim,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_six_mixed_row() {
        let t = reducibility_table(6).unwrap();
        let row = t.iter().find(|r| r.kind == RowKind::Mixed).unwrap();
        assert_eq!(row.l.to_string(), "-r^3");
        assert_eq!(row.labels, vec![SpechtLabel::of(&[1], &[4, 1])]);
        assert_eq!(row.dim, 24);
    }

    #[test]
    fn rank_four_rows() {
        let t = reducibility_table(4).unwrap();
        let ls: Vec<String> = t.iter().map(|r| r.l.to_string()).collect();
        assert_eq!(ls, ["1/r^9", "r^3", "-1/r^3", "-r^3", "1/r", "1/r"]);
        let labels: Vec<String> = t[..4].iter().map(|r| r.labels[0].to_string()).collect();
        assert_eq!(
            labels,
            ["((),(4))", "((),(2,2))", "((1),(3))", "((1),(2,1))"]
        );
        assert_eq!(t[5].labels.len(), 2);
        assert_eq!(t[5].dim, 6);
    }

    #[test]
    fn rank_five_reflection() {
        let t = reducibility_table(5).unwrap();
        assert_eq!(t[1].l.to_string(), "1/r^3");
        assert_eq!(
            (t[1].labels[0].to_string().as_str(), t[1].dim),
            ("((),(4,1))", 4)
        );
        assert!(reducibility_table(3).is_err());
    }

    #[test]
    fn closed_forms() {
        for n in 4..=30 {
            for row in reducibility_table(n).unwrap() {
                assert_eq!(
                    row.dim,
                    row.kind.closed_form_dim(n),
                    "n = {n}, {:?}",
                    row.kind
                );
            }
        }
    }
}
