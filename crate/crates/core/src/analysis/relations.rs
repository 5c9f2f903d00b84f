use serde::Serialize;

use crate::arith::RationalFunction;
use crate::corpus::MatrixRep;
use crate::field::Scalar;
use crate::matrix::Matrix;

use super::{AnalysisError, CoxeterGraphD};

/// One entry where a defining relation fails. `entry` is 1-indexed.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RelationFailure {
    pub nodes: Vec<usize>,
    pub entry: (usize, usize),
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct RelationReport {
    pub quadratic_failures: Vec<RelationFailure>,
    pub braid_failures: Vec<RelationFailure>,
    pub commuting_failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn is_valid(&self) -> bool {
        self.quadratic_failures.is_empty()
            && self.braid_failures.is_empty()
            && self.commuting_failures.is_empty()
    }
}

fn compare<F: Scalar>(
    nodes: Vec<usize>,
    lhs: &Matrix<F>,
    rhs: &Matrix<F>,
    out: &mut Vec<RelationFailure>,
) {
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            if lhs.get(i, j) != rhs.get(i, j) {
                out.push(RelationFailure {
                    nodes: nodes.clone(),
                    entry: (i + 1, j + 1),
                    lhs: lhs.get(i, j).to_string(),
                    rhs: rhs.get(i, j).to_string(),
                });
            }
        }
    }
}

/// Checks the Hecke relations of type `D_n` with the given value of `r`:
/// `g^2 = (r - 1/r) g + 1`, braid relations on edges and commutation on
/// non-edges.
pub fn verify_with<F: Scalar>(
    rep: &MatrixRep<F>,
    graph: &CoxeterGraphD,
    r: &F,
) -> Result<RelationReport, AnalysisError> {
    if rep.node_count() != graph.n {
        return Err(AnalysisError::NodeMismatch {
            expected: graph.n,
            found: rep.node_count(),
        });
    }
    let rinv = r
        .inverse()
        .ok_or(AnalysisError::ForbiddenPoint(r.to_string()))?;
    let q = r.minus(&rinv);
    let id = Matrix::<F>::identity(rep.degree());
    let g = |i: usize| rep.generator(i);
    let mut report = RelationReport::default();
    for i in 1..=graph.n {
        let lhs = g(i).mul(g(i));
        let rhs = g(i).scale(&q).add(&id);
        compare(vec![i], &lhs, &rhs, &mut report.quadratic_failures);
    }
    for (i, j) in graph.edges() {
        let lhs = g(i).mul(g(j)).mul(g(i));
        let rhs = g(j).mul(g(i)).mul(g(j));
        compare(vec![i, j], &lhs, &rhs, &mut report.braid_failures);
    }
    for (i, j) in graph.non_edges() {
        let lhs = g(i).mul(g(j));
        let rhs = g(j).mul(g(i));
        compare(vec![i, j], &lhs, &rhs, &mut report.commuting_failures);
    }
    Ok(report)
}

/// [`verify_with`] over Q(r) with the indeterminate `r`.
pub fn verify_representation(
    rep: &MatrixRep,
    graph: &CoxeterGraphD,
) -> Result<RelationReport, AnalysisError> {
    verify_with(rep, graph, &RationalFunction::r())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{m_rep, n_rep, one_dim_reps, two_dim_rep};

    #[test]
    fn corpus_reps_are_valid() {
        let d4 = CoxeterGraphD::new(4).unwrap();
        for rep in [m_rep(), n_rep(), two_dim_rep()] {
            let report = verify_representation(&rep, &d4).unwrap();
            assert!(report.is_valid(), "{}: {report:?}", rep.name());
        }
        for (_, rep) in one_dim_reps() {
            assert!(verify_representation(&rep, &d4).unwrap().is_valid());
        }
    }

    #[test]
    fn perturbation_is_located() {
        let d4 = CoxeterGraphD::new(4).unwrap();
        let rep = m_rep();
        let mut g2 = rep.generator(2).clone();
        g2.set(0, 1, RationalFunction::integer(2));
        let bad = rep.with_generator(2, g2).unwrap();
        let report = verify_representation(&bad, &d4).unwrap();
        assert!(!report.quadratic_failures.is_empty());
        assert!(report.quadratic_failures.iter().all(|f| f.nodes == vec![2]));
    }

    #[test]
    fn node_count_must_match() {
        let d5 = CoxeterGraphD::new(5).unwrap();
        assert!(matches!(
            verify_representation(&m_rep(), &d5),
            Err(AnalysisError::NodeMismatch {
                expected: 5,
                found: 4
            })
        ));
    }
}
