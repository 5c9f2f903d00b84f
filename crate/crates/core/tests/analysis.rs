use std::collections::HashMap;

use cgwd_core::analysis::{
    decompose, default_r0, forced_l, forced_l_lhs, invariant_subspaces, verify_representation,
    AnalysisError, CoxeterGraphD,
};
use cgwd_core::arith::{hecke_m, RationalFunction};
use cgwd_core::checks::spinning_oracle;
use cgwd_core::corpus::{m_rep, n_rep, named_reps, rep_by_name, two_dim_rep, MatrixRep};
use cgwd_core::matrix::Matrix;

/// Signed permutation of `{1..4}` for each node of `D_4`, as images of the
/// standard basis vectors (1-based, negative for a sign change).
fn weyl_generator(node: usize) -> [i8; 4] {
    match node {
        1 => [-2, -1, 3, 4],
        2 => [2, 1, 3, 4],
        3 => [1, 3, 2, 4],
        4 => [1, 2, 4, 3],
        _ => unreachable!(),
    }
}

fn compose(a: [i8; 4], b: [i8; 4]) -> [i8; 4] {
    // (a ∘ b)(e_i) = a(b(e_i))
    let mut out = [0; 4];
    for i in 0..4 {
        let j = b[i];
        let img = a[(j.unsigned_abs() - 1) as usize];
        out[i] = if j < 0 { -img } else { img };
    }
    out
}

fn words(max: usize) -> Vec<Vec<usize>> {
    let mut all = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &frontier {
            for s in 1..=4 {
                let mut v: Vec<usize> = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

#[test]
fn reduced_words_of_equal_elements_agree() {
    let word_list = words(4);
    let element = |w: &[usize]| {
        w.iter()
            .fold([1, 2, 3, 4], |acc, &s| compose(acc, weyl_generator(s)))
    };
    let mut length: HashMap<[i8; 4], usize> = HashMap::new();
    for w in &word_list {
        length
            .entry(element(w))
            .and_modify(|l| *l = (*l).min(w.len()))
            .or_insert(w.len());
    }
    for rep in [m_rep(), n_rep(), two_dim_rep()] {
        let mut seen: HashMap<[i8; 4], Matrix<RationalFunction>> = HashMap::new();
        for w in &word_list {
            let e = element(w);
            if length[&e] != w.len() {
                continue;
            }
            let product = w.iter().fold(Matrix::identity(rep.degree()), |acc, &s| {
                acc.mul(rep.generator(s))
            });
            match seen.get(&e) {
                Some(p) => assert_eq!(p, &product, "{} word {w:?}", rep.name()),
                None => {
                    seen.insert(e, product);
                }
            }
        }
        assert!(seen.len() > 40);
    }
}

#[test]
fn oracle_sees_the_full_lattice() {
    let big = named_reps()
        .into_iter()
        .max_by_key(MatrixRep::degree)
        .unwrap();
    assert_eq!(big.degree(), 10);
    let oracle = spinning_oracle(&big, &default_r0()).unwrap();
    assert_eq!(oracle.len(), 30);
    let ours = invariant_subspaces(&big, &default_r0()).unwrap();
    assert_eq!(ours.len(), 30);
}

#[test]
fn t_module_decomposes_into_two_threes() {
    let t = rep_by_name("m+n").unwrap();
    let dec = decompose(&t, &default_r0(), 3).unwrap();
    assert_eq!(dec.dims(), vec![3, 3]);
    let json = serde_json::to_value(&dec).unwrap();
    assert_eq!(json["r0"], "5/3");
    assert_eq!(json["constituents"][0]["basis"]["dimension"], 3);
}

#[test]
fn forced_value_of_l() {
    let l = forced_l();
    assert_eq!(l.to_string(), "r^3");
    assert_eq!(forced_l_lhs(&l, &hecke_m()), "r^3".parse().unwrap());
}

#[test]
fn symbolic_relation_report_serializes() {
    let d4 = CoxeterGraphD::new(4).unwrap();
    let report = verify_representation(&m_rep(), &d4).unwrap();
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["braid_failures"].as_array().unwrap().len(), 0);
    assert!(matches!(
        verify_representation(&m_rep(), &CoxeterGraphD::new(6).unwrap()),
        Err(AnalysisError::NodeMismatch { .. })
    ));
}
