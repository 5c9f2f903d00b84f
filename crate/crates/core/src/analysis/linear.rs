use std::collections::VecDeque;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::corpus::MatrixRep;
use crate::field::Scalar;
use crate::matrix::{Echelon, Matrix};

use super::AnalysisError;

/// A subspace given by a reduced echelon basis.
#[derive(Clone, PartialEq, Debug)]
pub struct SubspaceBasis<F> {
    pub vectors: Vec<Vec<F>>,
    pub dimension: usize,
}

impl<F: Scalar> SubspaceBasis<F> {
    pub fn from_echelon(e: Echelon<F>) -> Self {
        let dimension = e.rank();
        SubspaceBasis {
            vectors: e.into_rows(),
            dimension,
        }
    }

    pub fn echelon(&self, width: usize) -> Echelon<F> {
        let mut e = Echelon::new(width);
        for v in &self.vectors {
            e.insert(v.clone());
        }
        e
    }
}

impl<F: Scalar> Serialize for SubspaceBasis<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let vectors: Vec<Vec<String>> = self
            .vectors
            .iter()
            .map(|v| v.iter().map(ToString::to_string).collect())
            .collect();
        let mut s = serializer.serialize_struct("SubspaceBasis", 2)?;
        s.serialize_field("dimension", &self.dimension)?;
        s.serialize_field("vectors", &vectors)?;
        s.end()
    }
}

/// Basis of `{X : X a_i = b_i X for all i}` with `X` of shape
/// `deg b x deg a`, each flattened row-major.
fn intertwiner_kernel<F: Scalar>(a: &MatrixRep<F>, b: &MatrixRep<F>) -> Vec<Vec<F>> {
    let (p, q) = (b.degree(), a.degree());
    let width = p * q;
    let mut eqs = Echelon::new(width);
    for (ga, gb) in a.matrices().iter().zip(b.matrices()) {
        for i in 0..p {
            for j in 0..q {
                // (X a)_{ij} - (b X)_{ij}
                let mut row = vec![F::zero(); width];
                for k in 0..q {
                    let c = ga.get(k, j);
                    if !c.is_zero() {
                        row[i * q + k] = row[i * q + k].plus(c);
                    }
                }
                for k in 0..p {
                    let c = gb.get(i, k);
                    if !c.is_zero() {
                        row[k * q + j] = row[k * q + j].minus(c);
                    }
                }
                eqs.insert(row);
            }
        }
    }
    eqs.kernel()
}

/// Basis of the commutant, identity first.
pub fn commutant_basis<F: Scalar>(rep: &MatrixRep<F>) -> Vec<Matrix<F>> {
    let d = rep.degree();
    let to_matrix = |v: &[F]| Matrix::from_fn(d, d, |i, j| v[i * d + j].clone());
    let id = Matrix::<F>::identity(d);
    let mut span = Echelon::new(d * d);
    span.insert(id.to_rows().concat());
    let mut basis = vec![id];
    for v in intertwiner_kernel(rep, rep) {
        if span.insert(v.clone()) {
            basis.push(to_matrix(&v));
        }
    }
    basis
}

/// `dim Hom(a, b)`.
pub fn hom_space_dim<F: Scalar>(
    a: &MatrixRep<F>,
    b: &MatrixRep<F>,
) -> Result<usize, AnalysisError> {
    if a.node_count() != b.node_count() {
        return Err(AnalysisError::NodeMismatch {
            expected: a.node_count(),
            found: b.node_count(),
        });
    }
    Ok(intertwiner_kernel(a, b).len())
}

pub(crate) fn spin_echelon<F: Scalar>(
    v: &[F],
    rep: &MatrixRep<F>,
) -> Result<Echelon<F>, AnalysisError> {
    let d = rep.degree();
    if v.len() != d {
        return Err(AnalysisError::LengthMismatch {
            expected: d,
            found: v.len(),
        });
    }
    if v.iter().all(F::is_zero) {
        return Err(AnalysisError::ZeroVector);
    }
    let mut span = Echelon::new(d);
    let mut queue = VecDeque::from([v.to_vec()]);
    span.insert(v.to_vec());
    while let Some(u) = queue.pop_front() {
        for g in rep.matrices() {
            let w = g.mul_vec(&u);
            if span.insert(w.clone()) {
                if span.rank() == d {
                    return Ok(span);
                }
                queue.push_back(w);
            }
        }
    }
    Ok(span)
}

/// Smallest generator-stable subspace containing `v`.
pub fn spin<F: Scalar>(v: &[F], rep: &MatrixRep<F>) -> Result<SubspaceBasis<F>, AnalysisError> {
    spin_echelon(v, rep).map(SubspaceBasis::from_echelon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RationalFunction;
    use crate::corpus::{identity_rep, m_rep, n_rep, sign_rep, t_module, trivial_rep};

    type Rf = RationalFunction;

    #[test]
    fn commutant_dimensions() {
        assert_eq!(commutant_basis(&m_rep()).len(), 1);
        assert_eq!(commutant_basis(&n_rep()).len(), 1);
        assert_eq!(commutant_basis(&t_module()).len(), 2);
        assert_eq!(commutant_basis(&identity_rep(4, 3)).len(), 9);
    }

    #[test]
    fn commutant_is_closed_under_products() {
        let rep = t_module();
        let basis = commutant_basis(&rep);
        assert!(basis[0] == Matrix::identity(6));
        let d = rep.degree();
        let mut span = Echelon::new(d * d);
        for b in &basis {
            span.insert(b.to_rows().concat());
        }
        for a in &basis {
            for b in &basis {
                assert!(span.contains(&a.mul(b).to_rows().concat()));
            }
        }
    }

    #[test]
    fn hom_dimensions() {
        assert_eq!(hom_space_dim(&m_rep(), &n_rep()).unwrap(), 0);
        assert_eq!(hom_space_dim(&m_rep(), &m_rep()).unwrap(), 1);
        assert_eq!(hom_space_dim(&trivial_rep(4), &sign_rep(4)).unwrap(), 0);
        assert!(hom_space_dim(&trivial_rep(4), &trivial_rep(5)).is_err());
    }

    #[test]
    fn spinning() {
        let rep = t_module();
        let mut e1 = vec![Rf::zero(); 6];
        e1[0] = Rf::one();
        let s = spin(&e1, &rep).unwrap();
        assert_eq!(s.dimension, 3);
        assert!(s.vectors.iter().all(|v| v[3..].iter().all(Rf::is_zero)));
        let m = m_rep();
        for k in 0..3 {
            let mut v = vec![Rf::one(); 3];
            v[k] = Rf::r();
            assert_eq!(spin(&v, &m).unwrap().dimension, 3);
        }
        assert_eq!(
            spin(&vec![Rf::zero(); 3], &m),
            Err(AnalysisError::ZeroVector)
        );
    }
}
