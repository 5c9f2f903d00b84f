//! Partitions, type-D double-partition labels, their dimensions and the
//! branching rule from rank `n` to rank `n - 1`.

mod branching;
mod label;
mod partition;

use thiserror::Error;

pub use branching::{restrict, restrict_multi, BranchingMultiset};
pub use label::{SpechtLabel, Split};
pub use partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpechtError {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("label {0} has equal components and needs a split marker")]
    MissingSplit(String),
    #[error("cannot restrict rank {n} by {steps} step(s): the target rank must be at least 4")]
    RankTooSmall { n: u32, steps: u32 },
    #[error("label parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

/// `f^λ`, the number of standard tableaux of shape `λ`.
pub fn num_std_tableaux(p: &Partition) -> u128 {
    use num_traits::ToPrimitive;
    p.num_std_tableaux().to_u128().expect("fits in u128")
}

pub fn specht_dim(s: &SpechtLabel) -> u128 {
    s.dim()
}

/// Whether `S^{(0),λ}` lies in `Q_n(m)`, `n = |λ|`: the first row or the
/// first column has at least `n - m` boxes.
pub fn q_membership(p: &Partition, m: u32) -> bool {
    let n = p.size() as i64;
    let need = n - m as i64;
    p.first_row() as i64 >= need || p.first_column() as i64 >= need
}

/// Every label of rank `n` with dimension below `bound`, by dimension then
/// label.
pub fn screen_low_dim(n: u32, bound: u128) -> Vec<(SpechtLabel, u128)> {
    let mut out: Vec<(SpechtLabel, u128)> = SpechtLabel::all(n)
        .into_iter()
        .map(|l| {
            let d = l.dim();
            (l, d)
        })
        .filter(|(_, d)| *d < bound)
        .collect();
    out.sort_by(|x, y| (x.1, &x.0).cmp(&(y.1, &y.0)));
    out
}

/// Dimension of the Hecke algebra of type `D_n`, `2^{n-1} n!`.
pub fn hecke_dimension(n: u32) -> num_bigint::BigUint {
    partition::factorial(n) << (n as usize - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn q_membership_examples() {
        assert!(q_membership(&p(&[4, 2]), 2));
        assert!(!q_membership(&p(&[4, 2]), 1));
        assert!(q_membership(&p(&[3, 2, 1]), 3));
        assert!(!q_membership(&p(&[4, 4]), 3));
    }

    #[test]
    fn screen_small_cases() {
        let four = screen_low_dim(4, 2);
        let names: Vec<String> = four.iter().map(|(l, _)| l.to_string()).collect();
        assert_eq!(names, vec!["((),(1,1,1,1))", "((),(4))"]);
        assert!(screen_low_dim(9, 72).contains(&(SpechtLabel::of(&[], &[6, 3]), 48)));
    }

    #[test]
    fn sum_of_squares() {
        for n in 4..=9 {
            let total: num_bigint::BigUint =
                SpechtLabel::all(n).iter().map(|l| l.dim_big().pow(2)).sum();
            assert_eq!(total, hecke_dimension(n), "n = {n}");
        }
    }
}
