use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::SignedMonomial;
use crate::specht::SpechtLabel;

use super::constraint::{monomials_equal_at, semisimplicity_check, RConstraint};
use super::table::{reducibility_table, ReducibilityCondition, RowKind};
use super::ClassifyError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CaseTag {
    #[serde(rename = "irreducible")]
    Irreducible,
    #[serde(rename = "generic-unique")]
    GenericUnique,
    #[serde(rename = "case-ii")]
    CaseIi,
    #[serde(rename = "case-iii-n4")]
    CaseIiiN4,
    /// No prediction: the hypotheses fail or the match is ambiguous.
    #[serde(rename = "unresolved")]
    Unresolved,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Irreducible => "irreducible",
            CaseTag::GenericUnique => "generic-unique",
            CaseTag::CaseIi => "case-ii",
            CaseTag::CaseIiiN4 => "case-iii-n4",
            CaseTag::Unresolved => "unresolved",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PredictedSubspace {
    pub constituents: Vec<SpechtLabel>,
    pub dim: u128,
}

impl PredictedSubspace {
    fn new(mut constituents: Vec<SpechtLabel>) -> Self {
        constituents.sort();
        let dim = constituents.iter().map(SpechtLabel::dim).sum();
        PredictedSubspace { constituents, dim }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClassificationReport {
    pub n: u32,
    pub l: SignedMonomial,
    pub constraint: RConstraint,
    pub case_tag: CaseTag,
    pub subspaces: Vec<PredictedSubspace>,
    pub warnings: Vec<String>,
    pub semisimple: bool,
    pub within_hypotheses: bool,
}

impl ClassificationReport {
    pub fn max_dim(&self) -> Option<u128> {
        self.subspaces.iter().map(|s| s.dim).max()
    }

    /// CSV records `constituents, dim, case_tag`, one per subspace.
    pub fn csv_records(&self) -> Vec<[String; 3]> {
        self.subspaces
            .iter()
            .map(|s| {
                let names: Vec<String> = s.constituents.iter().map(ToString::to_string).collect();
                [
                    names.join(" + "),
                    s.dim.to_string(),
                    self.case_tag.as_str().to_string(),
                ]
            })
            .collect()
    }
}

/// All nonempty sums of the given constituents, by dimension then labels.
fn boolean_lattice(parts: &[Vec<SpechtLabel>], include_top: bool) -> Vec<PredictedSubspace> {
    let k = parts.len();
    let top = (1usize << k) - 1;
    let mut out: Vec<PredictedSubspace> = (1..=top)
        .filter(|&mask| include_top || mask != top)
        .map(|mask| {
            PredictedSubspace::new(
                (0..k)
                    .filter(|b| mask >> b & 1 == 1)
                    .flat_map(|b| parts[b].clone())
                    .collect(),
            )
        })
        .collect();
    out.sort_by(|a, b| (a.dim, &a.constituents).cmp(&(b.dim, &b.constituents)));
    out
}

/// Predicted proper invariant subspaces of the Cohen-Wales representation
/// of rank `n` at the given `l` and condition on `r`.
pub fn classify(
    n: u32,
    l: SignedMonomial,
    rc: &RConstraint,
) -> Result<ClassificationReport, ClassifyError> {
    let rows = reducibility_table(n)?;
    let ss = semisimplicity_check(n, rc);
    let mut report = ClassificationReport {
        n,
        l,
        constraint: *rc,
        case_tag: CaseTag::Unresolved,
        subspaces: Vec::new(),
        warnings: Vec::new(),
        semisimple: ss.admissible,
        within_hypotheses: false,
    };
    if !ss.admissible {
        report.warnings.push(format!(
            "no value of r with {rc} keeps the Hecke algebras of rank {n} semisimple; no prediction is made"
        ));
        for v in &ss.violations {
            report
                .warnings
                .push(format!("order {}: {}", v.order, v.reason));
        }
        return Ok(report);
    }

    let mut full: Vec<&ReducibilityCondition> = Vec::new();
    let mut partial: Vec<(&ReducibilityCondition, Vec<u64>)> = Vec::new();
    for row in &rows {
        if *rc == RConstraint::Generic {
            if row.l == l {
                full.push(row);
            }
            continue;
        }
        let holding: Vec<u64> = ss
            .admissible_orders
            .iter()
            .copied()
            .filter(|&d| monomials_equal_at(d, l, row.l))
            .collect();
        if holding.len() == ss.admissible_orders.len() {
            full.push(row);
        } else if !holding.is_empty() {
            partial.push((row, holding));
        }
    }

    if !partial.is_empty() {
        for row in &full {
            report.warnings.push(format!(
                "l = {} ({:?}) holds for every admissible r",
                row.l, row.kind
            ));
        }
        for (row, orders) in &partial {
            report.warnings.push(format!(
                "l = {} ({:?}) holds only when r has multiplicative order in {:?}",
                row.l, row.kind, orders
            ));
        }
        report
            .warnings
            .push("ambiguous match under the given condition on r; no prediction is made".into());
        return Ok(report);
    }

    let kinds: BTreeSet<RowKind> = full.iter().map(|r| r.kind).collect();
    let labels = |k: RowKind| {
        rows.iter()
            .find(|r| r.kind == k)
            .expect("row present")
            .labels
            .clone()
    };
    match kinds.iter().copied().collect::<Vec<_>>().as_slice() {
        [] => report.case_tag = CaseTag::Irreducible,
        [RowKind::Trivial, RowKind::Mixed] => {
            report.case_tag = CaseTag::CaseIi;
            report.subspaces =
                boolean_lattice(&[labels(RowKind::Trivial), labels(RowKind::Mixed)], true);
            if n == 4 {
                report.warnings.push(
                    "rank 4: the three-subspace answer is carried over from higher rank; further coincidences \
                     with the triality row are not excluded"
                        .into(),
                );
            }
        }
        [RowKind::Reflection, RowKind::Symmetric] if n == 4 => {
            report.case_tag = CaseTag::CaseIiiN4;
            let mut parts = vec![labels(RowKind::Reflection)];
            parts.extend(labels(RowKind::Symmetric).into_iter().map(|s| vec![s]));
            report.subspaces = boolean_lattice(&parts, true);
        }
        [k] => {
            report.case_tag = CaseTag::GenericUnique;
            report.subspaces = vec![PredictedSubspace::new(labels(*k))];
        }
        many => {
            report.warnings.push(format!(
                "l matches several rows {many:?} with no known lattice; no prediction is made"
            ));
            return Ok(report);
        }
    }
    report.within_hypotheses = true;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Sign;

    fn dims(r: &ClassificationReport) -> Vec<u128> {
        r.subspaces.iter().map(|s| s.dim).collect()
    }

    #[test]
    fn generic_unique_rank_six() {
        let r = classify(6, SignedMonomial::minus(3), &RConstraint::Generic).unwrap();
        assert_eq!(r.case_tag, CaseTag::GenericUnique);
        assert_eq!(dims(&r), vec![24]);
        assert_eq!(
            r.subspaces[0].constituents,
            vec![SpechtLabel::of(&[1], &[4, 1])]
        );
    }

    #[test]
    fn rank_four_triality() {
        let r = classify(4, SignedMonomial::plus(-1), &RConstraint::Generic).unwrap();
        assert_eq!(r.case_tag, CaseTag::CaseIiiN4);
        assert_eq!(dims(&r), vec![3, 3, 3, 6, 6, 6, 9]);
    }

    #[test]
    fn case_ii_rank_five() {
        let rc = RConstraint::Root {
            k: 16,
            sign: Sign::Minus,
        };
        let r = classify(5, SignedMonomial::minus(3), &rc).unwrap();
        assert_eq!(r.case_tag, CaseTag::CaseIi);
        assert_eq!(dims(&r), vec![1, 15, 16]);
        assert!(r.within_hypotheses);
    }

    #[test]
    fn no_match_is_irreducible() {
        let r = classify(5, SignedMonomial::plus(5), &RConstraint::Generic).unwrap();
        assert_eq!(r.case_tag, CaseTag::Irreducible);
        assert!(r.subspaces.is_empty());
    }

    #[test]
    fn non_semisimple_gives_no_prediction() {
        let rc = RConstraint::Root {
            k: 4,
            sign: Sign::Plus,
        };
        let r = classify(5, SignedMonomial::plus(3), &rc).unwrap();
        assert!(!r.semisimple && !r.within_hypotheses);
        assert_eq!(r.case_tag, CaseTag::Unresolved);
        assert!(!r.warnings.is_empty());
    }

    #[test]
    fn csv_rows() {
        let r = classify(4, SignedMonomial::plus(-1), &RConstraint::Generic).unwrap();
        let rows = r.csv_records();
        assert_eq!(rows.len(), 7);
        assert_eq!(rows[6][1], "9");
        assert_eq!(rows[6][2], "case-iii-n4");
        assert!(classify(3, SignedMonomial::plus(3), &RConstraint::Generic).is_err());
    }
}
