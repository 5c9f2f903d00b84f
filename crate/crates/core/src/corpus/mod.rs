//! Ground-truth data: explicit representations, named vectors, the
//! commutant eigenvalues and the `k(n)` reference table.

mod ktable;
mod params;
mod rep;
mod reps;
mod vectors;

use serde::Serialize;
use thiserror::Error;

pub use ktable::{k_table, lookup as k_lookup, KTableEntry, KValue};
pub use params::{param_convert, CohenWalesParams};
pub use rep::{MatrixRep, RepError};
pub use reps::{
    commutant_eigenvalues, identity_rep, m_rep, m_rep_with, n_rep, n_rep_with, named_reps,
    one_dim_reps, rep_by_name, sign_rep, t_module, trivial_rep, two_dim_rep,
};
pub use vectors::{
    named_vectors, u1_two_dim, w_recurrence, w_vector, BasisVectorFormula, Coord, WIndex,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
}

#[derive(Serialize)]
struct CorpusFile {
    representations: Vec<MatrixRep>,
    vectors: std::collections::BTreeMap<String, BasisVectorFormula>,
    commutant_eigenvalues: [String; 2],
    k_table: Vec<KTableEntry>,
}

/// The whole corpus as pretty-printed JSON with a trailing newline.
pub fn corpus_json() -> String {
    let (l1, l2) = commutant_eigenvalues();
    let file = CorpusFile {
        representations: named_reps(),
        vectors: named_vectors(),
        commutant_eigenvalues: [l1.to_string(), l2.to_string()],
        k_table: k_table(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("corpus serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_corpus_matches_code() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/corpus.json");
        if std::env::var_os("CGWD_BLESS").is_some() {
            std::fs::write(path, corpus_json()).unwrap();
        }
        let shipped = std::fs::read_to_string(path).unwrap();
        assert!(
            shipped == corpus_json(),
            "data/corpus.json is stale; regenerate it with `cgwd corpus`"
        );
    }

    #[test]
    fn matrix_entries_round_trip_through_text() {
        for rep in named_reps() {
            for m in rep.matrices() {
                for row in m.to_rows() {
                    for e in row {
                        assert_eq!(
                            e.to_string()
                                .parse::<crate::arith::RationalFunction>()
                                .unwrap(),
                            e
                        );
                    }
                }
            }
        }
    }
}
