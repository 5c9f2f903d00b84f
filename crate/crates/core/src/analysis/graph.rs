use serde::Serialize;

use super::AnalysisError;

/// The Coxeter graph of type `D_n`: nodes `1` and `2` hang off node `3`,
/// and `3 - 4 - ... - n` is a path.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CoxeterGraphD {
    pub n: usize,
}

impl CoxeterGraphD {
    pub fn new(n: usize) -> Result<Self, AnalysisError> {
        if n < 3 {
            return Err(AnalysisError::GraphTooSmall(n));
        }
        Ok(CoxeterGraphD { n })
    }

    /// Edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = vec![(1, 3), (2, 3)];
        e.extend((3..self.n).map(|i| (i, i + 1)));
        e
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        let (a, b) = (i.min(j), i.max(j));
        matches!((a, b), (1, 3) | (2, 3)) || (a >= 3 && b == a + 1 && b <= self.n)
    }

    /// Pairs of distinct nodes that are not joined.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if !self.is_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_shape() {
        let g = CoxeterGraphD::new(4).unwrap();
        assert_eq!(g.edges(), vec![(1, 3), (2, 3), (3, 4)]);
        assert_eq!(g.non_edges(), vec![(1, 2), (1, 4), (2, 4)]);
        assert!(!g.is_edge(1, 2));
    }

    #[test]
    fn is_a_tree() {
        for n in 3..12 {
            let g = CoxeterGraphD::new(n).unwrap();
            assert_eq!(g.edges().len(), n - 1);
            assert_eq!(g.edges().len() + g.non_edges().len(), n * (n - 1) / 2);
        }
        assert!(CoxeterGraphD::new(2).is_err());
    }
}
