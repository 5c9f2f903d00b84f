//! Brute-force oracles used to cross-check the main algorithms.

use std::collections::BTreeSet;

use crate::analysis::AnalysisError;
use crate::arith::{int, Rational};
use crate::corpus::MatrixRep;
use crate::matrix::{Echelon, Matrix};
use crate::specht::Partition;

/// Number of standard tableaux of shape `p`, by placing `1, 2, ...` one at
/// a time in every addable cell.
pub fn brute_force_syt(p: &Partition) -> u128 {
    fn fill(shape: &[u32], rows: &mut Vec<u32>, placed: u32, total: u32) -> u128 {
        if placed == total {
            return 1;
        }
        let mut count = 0;
        for i in 0..shape.len() {
            let fits = rows[i] < shape[i] && (i == 0 || rows[i - 1] > rows[i]);
            if fits {
                rows[i] += 1;
                count += fill(shape, rows, placed + 1, total);
                rows[i] -= 1;
            }
        }
        count
    }
    let shape = p.parts().to_vec();
    let mut rows = vec![0; shape.len()];
    fill(&shape, &mut rows, 0, p.size())
}

fn echelon_of(rows: &[Vec<Rational>], width: usize) -> Echelon<Rational> {
    let mut e = Echelon::new(width);
    for r in rows {
        e.insert(r.clone());
    }
    e
}

fn spin_rows(v: &[Rational], rep: &MatrixRep<Rational>) -> Vec<Vec<Rational>> {
    let d = rep.degree();
    let mut span = Echelon::new(d);
    let mut stack = vec![v.to_vec()];
    span.insert(v.to_vec());
    while let Some(u) = stack.pop() {
        for g in rep.matrices() {
            let w = g.mul_vec(&u);
            if span.insert(w.clone()) {
                stack.push(w);
            }
        }
    }
    span.into_rows()
}

/// Every proper nonzero invariant subspace reachable by spinning the basis
/// vectors of `null(P - λ)` for `P` a generator or a product of two, and
/// `λ` among the products of the generator eigenvalues, closed under sum
/// and intersection. Subspaces are returned as reduced echelon bases.
pub fn spinning_oracle(
    rep: &MatrixRep,
    r0: &Rational,
) -> Result<BTreeSet<Vec<Vec<Rational>>>, AnalysisError> {
    let spec = rep.specialize(r0)?;
    let d = spec.degree();
    let inv = r0.recip();
    let lambdas = [r0.clone(), -inv.clone(), r0 * r0, int(-1), &inv * &inv];
    let mut operators: Vec<Matrix<Rational>> = spec.matrices().to_vec();
    for a in spec.matrices() {
        for b in spec.matrices() {
            operators.push(a.mul(b));
        }
    }
    let mut found: BTreeSet<Vec<Vec<Rational>>> = BTreeSet::new();
    for p in &operators {
        for lambda in &lambdas {
            let shifted = p.sub(&Matrix::identity(d).scale(lambda));
            for v in shifted.nullspace() {
                let s = spin_rows(&v, &spec);
                if s.len() < d {
                    found.insert(s);
                }
            }
        }
    }
    loop {
        let current: Vec<Vec<Vec<Rational>>> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                let (ea, eb) = (echelon_of(a, d), echelon_of(b, d));
                for e in [ea.sum(&eb), ea.intersect(&eb)] {
                    if e.rank() > 0 && e.rank() < d && found.insert(e.into_rows()) {
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return Ok(found);
        }
    }
}
