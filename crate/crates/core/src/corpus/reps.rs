//! The explicit Hecke-algebra matrices of type `D_4` used as ground truth.

use crate::arith::{hecke_m, RationalFunction};
use crate::matrix::Matrix;
use crate::specht::{Partition, SpechtLabel};

use super::rep::MatrixRep;

type Rf = RationalFunction;

fn mat(rows: Vec<Vec<Rf>>) -> Matrix<Rf> {
    Matrix::from_rows(rows)
}

fn k(n: i64) -> Rf {
    Rf::integer(n)
}

/// The `U`-module matrices with an arbitrary value substituted for `m`.
pub fn m_rep_with(m: &Rf) -> MatrixRep {
    let r = Rf::r();
    let m2 = mat(vec![
        vec![k(0), k(1), k(0)],
        vec![k(1), -m, k(0)],
        vec![k(0), k(0), r.clone()],
    ]);
    let m3 = mat(vec![
        vec![k(0), m * &r, k(1)],
        vec![k(0), r.clone(), k(0)],
        vec![k(1), -m, -m],
    ]);
    let m1 = mat(vec![
        vec![-m, k(-1), m / &r],
        vec![k(-1), k(0), m.clone()],
        vec![k(0), k(0), r.clone()],
    ]);
    let m4 = m2.clone();
    MatrixRep::new("M", vec![m1, m2, m3, m4]).expect("3x3 generators")
}

/// The `W`-module matrices with an arbitrary value substituted for `m`.
pub fn n_rep_with(m: &Rf) -> MatrixRep {
    let r = Rf::r();
    let n2 = mat(vec![
        vec![-m, k(0), k(1)],
        vec![k(0), r.clone(), k(0)],
        vec![k(1), k(0), k(0)],
    ]);
    let n3 = mat(vec![
        vec![k(0), k(1), k(0)],
        vec![k(1), -m, k(0)],
        vec![k(0), k(0), r.clone()],
    ]);
    let n1 = mat(vec![
        vec![k(0), m * &r, k(-1)],
        vec![k(0), r.clone(), k(0)],
        vec![k(-1), m.clone(), -m],
    ]);
    let n4 = n1.clone();
    MatrixRep::new("N", vec![n1, n2, n3, n4]).expect("3x3 generators")
}

pub fn m_rep() -> MatrixRep {
    m_rep_with(&hecke_m())
}

pub fn n_rep() -> MatrixRep {
    n_rep_with(&hecke_m())
}

/// Degree-2 representation realising `S^{(0),(2,2)}`; columns are the
/// images of `u1`, `u2`.
pub fn two_dim_rep() -> MatrixRep {
    let r = Rf::r();
    let ri = r.inv().expect("r is nonzero");
    let outer = mat(vec![vec![-&ri, k(1)], vec![k(0), r.clone()]]);
    let middle = mat(vec![vec![r.clone(), k(0)], vec![k(1), -&ri]]);
    MatrixRep::new("two_dim", vec![outer.clone(), outer.clone(), middle, outer])
        .expect("2x2 generators")
}

/// Every generator acting by `r` on `nodes` nodes.
pub fn trivial_rep(nodes: usize) -> MatrixRep {
    MatrixRep::new("trivial", vec![mat(vec![vec![Rf::r()]]); nodes]).expect("1x1 generators")
}

/// Every generator acting by `-1/r` on `nodes` nodes.
pub fn sign_rep(nodes: usize) -> MatrixRep {
    let v = -Rf::r().inv().expect("r is nonzero");
    MatrixRep::new("sign", vec![mat(vec![vec![v]]); nodes]).expect("1x1 generators")
}

/// The two one-dimensional representations of `H(D_4)` with their labels.
pub fn one_dim_reps() -> Vec<(SpechtLabel, MatrixRep)> {
    vec![
        (SpechtLabel::zero(Partition::row(4)), trivial_rep(4)),
        (SpechtLabel::zero(Partition::column(4)), sign_rep(4)),
    ]
}

/// Degree-`d` representation sending every node to the identity.
pub fn identity_rep(nodes: usize, d: usize) -> MatrixRep {
    MatrixRep::new("identity", vec![Matrix::identity(d); nodes]).expect("square generators")
}

/// `M ⊕ N`, the 6-dimensional module spanned by the `t_ij`.
pub fn t_module() -> MatrixRep {
    MatrixRep::direct_sum("M+N", &[&m_rep(), &n_rep()]).expect("same node count")
}

/// Every embedded representation, by name.
pub fn named_reps() -> Vec<MatrixRep> {
    let (m, n, two) = (m_rep(), n_rep(), two_dim_rep());
    let (triv, sign) = (trivial_rep(4), sign_rep(4));
    vec![
        m.clone(),
        n.clone(),
        two.clone(),
        triv.clone(),
        sign.clone(),
        t_module(),
        MatrixRep::direct_sum("M+N+two_dim+trivial+sign", &[&m, &n, &two, &triv, &sign])
            .expect("same node count"),
    ]
}

/// Looks up one of [`named_reps`], the identity family excluded.
pub fn rep_by_name(name: &str) -> Option<MatrixRep> {
    named_reps()
        .into_iter()
        .find(|r| r.name().eq_ignore_ascii_case(name))
}

/// The two eigenvalues of the non-scalar commutant element of `M ⊕ N`.
pub fn commutant_eigenvalues() -> (Rf, Rf) {
    let l1: Rf = "(1 - r^2 + 2*r^4)/(r*(1 - r^2))"
        .parse()
        .expect("valid expression");
    let l2: Rf = "r*(r^4 - r^2 + 2)/(r^2 - 1)"
        .parse()
        .expect("valid expression");
    (l1, l2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    #[test]
    fn transcription_spot_checks() {
        let m = m_rep();
        assert_eq!(m.generator(2).row(2), &[k(0), k(0), Rf::r()]);
        assert_eq!(m.generator(2), m.generator(4));
        let n = n_rep();
        assert_eq!(n.generator(1), n.generator(4));
        assert_eq!(m.degree(), 3);
        assert_eq!(m.node_count(), 4);
    }

    #[test]
    fn two_dim_action() {
        let t = two_dim_rep();
        let ri = Rf::r().inv().unwrap();
        assert_eq!(t.generator(1).mul_vec(&[k(1), k(0)]), vec![-&ri, k(0)]);
        assert_eq!(t.generator(3).mul_vec(&[k(0), k(1)]), vec![k(0), -&ri]);
    }

    #[test]
    fn eigenvalue_values() {
        let (l1, l2) = commutant_eigenvalues();
        let two = Rational::from_integer(2.into());
        assert_eq!(
            l1.eval(&two).unwrap(),
            Rational::new((-29).into(), 6.into())
        );
        assert_eq!(l2.eval(&two).unwrap(), Rational::new(28.into(), 3.into()));
        assert!(!(&l1 - &l2).is_zero());
    }

    #[test]
    fn names_resolve() {
        for rep in named_reps() {
            assert_eq!(rep_by_name(rep.name()).unwrap(), rep);
        }
        assert!(rep_by_name("nope").is_none());
    }
}
