use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::{ArithError, Rational, RationalFunction};
use crate::field::Scalar;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("a representation needs at least one generator")]
    Empty,
    #[error("generator {node} is {rows}x{cols}, expected {degree}x{degree}")]
    Shape {
        node: usize,
        rows: usize,
        cols: usize,
        degree: usize,
    },
    #[error("node {node} out of range 1..={count}")]
    NoSuchNode { node: usize, count: usize },
}

/// One square matrix per Coxeter node, all of a common size. Node `i` is
/// stored at index `i - 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct MatrixRep<F = RationalFunction> {
    name: String,
    matrices: Vec<Matrix<F>>,
}

impl<F: Scalar> MatrixRep<F> {
    pub fn new(name: impl Into<String>, matrices: Vec<Matrix<F>>) -> Result<Self, RepError> {
        let degree = matrices.first().ok_or(RepError::Empty)?.rows();
        for (i, m) in matrices.iter().enumerate() {
            if m.rows() != degree || m.cols() != degree {
                return Err(RepError::Shape {
                    node: i + 1,
                    rows: m.rows(),
                    cols: m.cols(),
                    degree,
                });
            }
        }
        Ok(MatrixRep {
            name: name.into(),
            matrices,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn node_count(&self) -> usize {
        self.matrices.len()
    }

    pub fn degree(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn matrices(&self) -> &[Matrix<F>] {
        &self.matrices
    }

    /// The matrix of node `node` (1-based).
    pub fn generator(&self, node: usize) -> &Matrix<F> {
        &self.matrices[node - 1]
    }

    /// A copy with the matrix of `node` replaced.
    pub fn with_generator(&self, node: usize, m: Matrix<F>) -> Result<Self, RepError> {
        if node == 0 || node > self.node_count() {
            return Err(RepError::NoSuchNode {
                node,
                count: self.node_count(),
            });
        }
        let mut matrices = self.matrices.clone();
        matrices[node - 1] = m;
        MatrixRep::new(format!("{}*", self.name), matrices)
    }

    /// Block-diagonal sum; all parts must have the same node count.
    pub fn direct_sum(name: impl Into<String>, parts: &[&MatrixRep<F>]) -> Result<Self, RepError> {
        let count = parts.first().ok_or(RepError::Empty)?.node_count();
        if let Some(bad) = parts.iter().find(|p| p.node_count() != count) {
            return Err(RepError::NoSuchNode {
                node: bad.node_count(),
                count,
            });
        }
        let matrices = (0..count)
            .map(|i| {
                let blocks: Vec<&Matrix<F>> = parts.iter().map(|p| &p.matrices[i]).collect();
                Matrix::direct_sum(&blocks)
            })
            .collect();
        MatrixRep::new(name, matrices)
    }

    /// The contragredient-style transposed family `g_i -> g_i^T`.
    pub fn transpose(&self) -> Self {
        MatrixRep {
            name: format!("{}^T", self.name),
            matrices: self.matrices.iter().map(Matrix::transpose).collect(),
        }
    }

    pub fn map<G: Scalar, E>(
        &self,
        mut f: impl FnMut(&F) -> Result<G, E>,
    ) -> Result<MatrixRep<G>, E> {
        let matrices = self
            .matrices
            .iter()
            .map(|m| m.try_map(&mut f))
            .collect::<Result<_, _>>()?;
        Ok(MatrixRep {
            name: self.name.clone(),
            matrices,
        })
    }
}

impl MatrixRep<RationalFunction> {
    /// Entries evaluated at `r = r0`.
    pub fn specialize(&self, r0: &Rational) -> Result<MatrixRep<Rational>, ArithError> {
        self.map(|f| f.eval(r0))
    }
}

impl<F: Scalar> Serialize for MatrixRep<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let matrices: Vec<Vec<Vec<String>>> = self
            .matrices
            .iter()
            .map(|m| {
                m.to_rows()
                    .iter()
                    .map(|row| row.iter().map(ToString::to_string).collect())
                    .collect()
            })
            .collect();
        let mut s = serializer.serialize_struct("MatrixRep", 4)?;
        s.serialize_field("name", &self.name)?;
        s.serialize_field("nodes", &self.node_count())?;
        s.serialize_field("degree", &self.degree())?;
        s.serialize_field("matrices", &matrices)?;
        s.end()
    }
}
