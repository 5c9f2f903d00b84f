use serde::Serialize;

use crate::arith::SignedMonomial;

use super::constraint::{semisimplicity_check, RConstraint};
use super::table::{reducibility_table, RowKind};
use super::ClassifyError;

/// When two reducibility values of `l` agree.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", content = "constraint", rename_all = "kebab-case")]
pub enum Agreement {
    Always,
    Never,
    When(RConstraint),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Coincidence {
    pub rows: (RowKind, RowKind),
    pub values: (SignedMonomial, SignedMonomial),
    pub agreement: Agreement,
    /// Some `r` satisfying the agreement keeps both Hecke algebras
    /// semisimple.
    pub admissible: bool,
}

/// `a = b` rewritten as a condition on `r`.
pub fn agreement(a: SignedMonomial, b: SignedMonomial) -> Agreement {
    let q = a.ratio(b);
    match (q.exponent, q.sign == crate::arith::Sign::Plus) {
        (0, true) => Agreement::Always,
        (0, false) => Agreement::Never,
        (e, _) => {
            // r^e = s is equivalent to r^{-e} = s
            Agreement::When(RConstraint::Root {
                k: e.unsigned_abs() as u32,
                sign: q.sign,
            })
        }
    }
}

/// Every unordered pair of table rows with its agreement condition.
pub fn coincidences(n: u32) -> Result<Vec<Coincidence>, ClassifyError> {
    let rows = reducibility_table(n)?;
    let mut out = Vec::new();
    for (i, a) in rows.iter().enumerate() {
        for b in &rows[i + 1..] {
            let agreement = agreement(a.l, b.l);
            let admissible = match agreement {
                Agreement::Always => true,
                Agreement::Never => false,
                Agreement::When(rc) => semisimplicity_check(n, &rc).admissible,
            };
            out.push(Coincidence {
                rows: (a.kind, b.kind),
                values: (a.l, b.l),
                agreement,
                admissible,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Sign;

    fn admissible(n: u32) -> Vec<Coincidence> {
        coincidences(n)
            .unwrap()
            .into_iter()
            .filter(|c| c.admissible)
            .collect()
    }

    #[test]
    fn one_admissible_pair_from_rank_five() {
        for n in 5..=12 {
            let a = admissible(n);
            assert_eq!(a.len(), 1, "n = {n}");
            assert_eq!(a[0].rows, (RowKind::Trivial, RowKind::Mixed));
            assert_eq!(
                a[0].agreement,
                Agreement::When(RConstraint::Root {
                    k: 4 * n - 4,
                    sign: Sign::Minus
                })
            );
        }
    }

    #[test]
    fn rank_four() {
        let a = admissible(4);
        assert_eq!(a.len(), 2);
        assert!(a
            .iter()
            .any(|c| c.rows == (RowKind::Reflection, RowKind::Symmetric)
                && c.agreement == Agreement::Always));
        assert!(a
            .iter()
            .any(|c| c.rows == (RowKind::Trivial, RowKind::Mixed)));
    }

    #[test]
    fn rank_five_two_row_symmetric() {
        let c = coincidences(5).unwrap();
        let pair = c
            .iter()
            .find(|c| c.rows == (RowKind::TwoRow, RowKind::Symmetric))
            .unwrap();
        assert_eq!(
            pair.agreement,
            Agreement::When(RConstraint::Root {
                k: 4,
                sign: Sign::Plus
            })
        );
        assert!(!pair.admissible);
        assert_eq!(c.len(), 15);
    }
}
