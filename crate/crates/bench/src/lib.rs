//! Shared workloads for the criterion benches.

use cgwd_core::classify::{classify, reducibility_table, ClassificationReport, RConstraint};
use cgwd_core::Sign;

/// Classifies every table value of `l` for each rank in `ranks`, generically
/// and under `r^k = ±1` for `k <= 2n`.
pub fn classify_sweep(ranks: std::ops::RangeInclusive<u32>) -> Vec<ClassificationReport> {
    let mut out = Vec::new();
    for n in ranks {
        let rows = reducibility_table(n).expect("rank at least 4");
        let mut constraints = vec![RConstraint::Generic];
        for k in 1..=2 * n {
            for sign in [Sign::Plus, Sign::Minus] {
                constraints.push(RConstraint::root(k, sign).expect("k positive"));
            }
        }
        for row in &rows {
            for rc in &constraints {
                out.push(classify(n, row.l, rc).expect("rank at least 4"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_size() {
        assert_eq!(classify_sweep(4..=5).len(), 6 * (1 + 16) + 6 * (1 + 20));
    }
}
