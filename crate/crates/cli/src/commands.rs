use anyhow::{anyhow, bail, Context, Result};
use cgwd_core::analysis::{
    commutant_basis, decompose, invariant_subspaces, verify_representation, CoxeterGraphD,
    SubspaceBasis,
};
use cgwd_core::arith::{parse_rational, parse_rational_function, Rational};
use cgwd_core::classify::{
    classify, coincidences, james_screen, reducibility_table, Agreement, RConstraint, ScreenStatus,
};
use cgwd_core::corpus::{
    corpus_json, k_table, named_reps, param_convert, rep_by_name, KValue, MatrixRep,
};
use cgwd_core::specht::{hecke_dimension, restrict_multi, screen_low_dim, SpechtLabel};
use cgwd_core::{checks, SignedMonomial};
use serde_json::json;

use crate::cli::Command;
use crate::config::CliConfig;
use crate::output::Rendered;

/// A rendered result; `verified` is false when a verification command found
/// a failure.
pub struct Outcome {
    pub rendered: Rendered,
    pub verified: bool,
}

impl From<Rendered> for Outcome {
    fn from(rendered: Rendered) -> Self {
        Outcome {
            rendered,
            verified: true,
        }
    }
}

pub fn run(command: &Command, cfg: &CliConfig) -> Result<Outcome> {
    match command {
        Command::Dims { n } => dims(*n).map(Into::into),
        Command::Restrict { label, steps } => restrict(label, *steps).map(Into::into),
        Command::Screen { n, bound } => screen(*n, *bound).map(Into::into),
        Command::James { n } => james(*n).map(Into::into),
        Command::Table { n } => table(*n).map(Into::into),
        Command::Classify { n, l, root } => classify_cmd(*n, l, root.as_deref()).map(Into::into),
        Command::Coincidences { n } => coincidences_cmd(*n, cfg).map(Into::into),
        Command::VerifyReps => verify_reps(),
        Command::Commutant { rep } => commutant(rep).map(Into::into),
        Command::Decompose { rep, r0, seed } => {
            decompose_cmd(rep, &r0_or(r0.as_deref(), cfg)?, seed.unwrap_or(cfg.seed))
                .map(Into::into)
        }
        Command::Subspaces { rep, r0 } => {
            subspaces(rep, &r0_or(r0.as_deref(), cfg)?).map(Into::into)
        }
        Command::Ktable => ktable().map(Into::into),
        Command::ConvertParams { t, r_cw } => convert_params(t, r_cw).map(Into::into),
        Command::Check { id } => check(*id),
        Command::Corpus { .. } => unreachable!("corpus output bypasses rendering"),
    }
}

fn r0_or(text: Option<&str>, cfg: &CliConfig) -> Result<Rational> {
    let Some(text) = text else {
        return Ok(cfg.r0.clone());
    };
    let r0 = parse_rational(text).with_context(|| format!("parsing r0 `{text}`"))?;
    let probe = CliConfig {
        r0: r0.clone(),
        ..cfg.clone()
    };
    probe.validate()?;
    Ok(r0)
}

fn rep(name: &str) -> Result<MatrixRep> {
    rep_by_name(name).ok_or_else(|| {
        let known: Vec<String> = named_reps().iter().map(|r| r.name().to_string()).collect();
        anyhow!(
            "unknown representation `{name}`; expected one of {}",
            known.join(", ")
        )
    })
}

fn label(text: &str) -> Result<SpechtLabel> {
    text.parse()
        .with_context(|| format!("parsing label `{text}`"))
}

fn dims(n: u32) -> Result<Rendered> {
    if n < 2 {
        bail!("rank must be at least 2 (got {n})");
    }
    let labels = SpechtLabel::all(n);
    let modules: Vec<_> = labels
        .iter()
        .map(|s| json!({"label": s, "dim": s.dim()}))
        .collect();
    let rows = labels
        .iter()
        .map(|s| vec![s.to_string(), s.dim().to_string()])
        .collect();
    let sum_sq = labels
        .iter()
        .map(|s| s.dim_big().pow(2))
        .reduce(|a, b| a + b)
        .unwrap_or_default();
    let value = json!({"n": n, "modules": modules, "sum_of_squares": sum_sq.to_string(), "hecke_dimension": hecke_dimension(n).to_string()});
    Rendered::new(&value, vec!["label", "dim"], rows)
}

fn restrict(text: &str, steps: u32) -> Result<Rendered> {
    let s = label(text)?;
    let m = restrict_multi(&s, steps)?;
    let rows = m
        .entries()
        .iter()
        .map(|(l, k)| vec![l.to_string(), k.to_string(), l.dim().to_string()])
        .collect();
    Ok(
        Rendered::new(&m, vec!["label", "multiplicity", "dim"], rows)?.with_notes(vec![format!(
            "total dimension {} (source {})",
            m.total_dim(),
            s.dim()
        )]),
    )
}

fn screen(n: u32, bound: Option<u128>) -> Result<Rendered> {
    if n < 4 {
        bail!("rank must be at least 4 (got {n})");
    }
    let bound = bound.unwrap_or((n * n - n) as u128);
    let hits = screen_low_dim(n, bound);
    let entries: Vec<_> = hits
        .iter()
        .map(|(l, d)| json!({"label": l, "dim": d}))
        .collect();
    let rows = hits
        .iter()
        .map(|(l, d)| vec![l.to_string(), d.to_string()])
        .collect();
    Rendered::new(
        &json!({"n": n, "bound": bound, "entries": entries}),
        vec!["label", "dim"],
        rows,
    )
}

fn james(n: u32) -> Result<Rendered> {
    let screen = james_screen(n)?;
    let rows = screen
        .entries
        .iter()
        .map(|e| {
            let (status, detail) = match &e.status {
                ScreenStatus::TableFamily { kind } => ("table-family", serde_plain(kind)),
                ScreenStatus::Excluded { reason } => ("excluded", reason.clone()),
                ScreenStatus::ConjugateOnly => ("conjugate-only", String::new()),
                ScreenStatus::Exception { level } => ("exception", level.to_string()),
                ScreenStatus::Other => ("other", String::new()),
            };
            vec![
                e.label.to_string(),
                e.dim.to_string(),
                status.to_string(),
                detail,
            ]
        })
        .collect();
    Rendered::new(&screen, vec!["label", "dim", "status", "detail"], rows)
}

fn serde_plain<T: serde::Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        Ok(other) => other.to_string(),
        Err(e) => e.to_string(),
    }
}

fn joined(labels: &[SpechtLabel]) -> String {
    labels
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" + ")
}

fn table(n: u32) -> Result<Rendered> {
    let rows_data = reducibility_table(n)?;
    let rows = rows_data
        .iter()
        .map(|r| {
            vec![
                serde_plain(&r.kind),
                r.l.to_string(),
                joined(&r.labels),
                r.dim.to_string(),
            ]
        })
        .collect();
    Rendered::new(&rows_data, vec!["kind", "l", "constituents", "dim"], rows)
}

fn classify_cmd(n: u32, l: &str, root: Option<&str>) -> Result<Rendered> {
    let l: SignedMonomial = l.parse().with_context(|| format!("parsing l `{l}`"))?;
    let rc: RConstraint = match root {
        None => RConstraint::Generic,
        Some(text) => text
            .parse()
            .with_context(|| format!("parsing root constraint `{text}`"))?,
    };
    let report = classify(n, l, &rc)?;
    let rows = report.csv_records().into_iter().map(Vec::from).collect();
    let mut notes = vec![format!("case {}", report.case_tag.as_str())];
    notes.extend(report.warnings.iter().map(|w| format!("warning: {w}")));
    Ok(Rendered::new(&report, vec!["constituents", "dim", "case_tag"], rows)?.with_notes(notes))
}

fn coincidences_cmd(n: Option<u32>, cfg: &CliConfig) -> Result<Rendered> {
    let ranks: Vec<u32> = match n {
        Some(n) => vec![n],
        None => (cfg.n_min..=cfg.n_max).collect(),
    };
    let mut all = Vec::new();
    let mut rows = Vec::new();
    for n in ranks {
        let cs = coincidences(n)?;
        for c in &cs {
            let agreement = match c.agreement {
                Agreement::Always => "always".to_string(),
                Agreement::Never => "never".to_string(),
                Agreement::When(rc) => rc.to_string(),
            };
            rows.push(vec![
                n.to_string(),
                serde_plain(&c.rows.0),
                serde_plain(&c.rows.1),
                c.values.0.to_string(),
                c.values.1.to_string(),
                agreement,
                c.admissible.to_string(),
            ]);
        }
        all.push(json!({"n": n, "pairs": cs}));
    }
    Rendered::new(
        &all,
        vec![
            "n",
            "row_a",
            "row_b",
            "l_a",
            "l_b",
            "agreement",
            "admissible",
        ],
        rows,
    )
}

fn verify_reps() -> Result<Outcome> {
    let mut reports = Vec::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for rep in named_reps() {
        let graph = CoxeterGraphD::new(rep.node_count())?;
        let report = verify_representation(&rep, &graph)?;
        ok &= report.is_valid();
        rows.push(vec![
            rep.name().to_string(),
            rep.degree().to_string(),
            report.quadratic_failures.len().to_string(),
            report.braid_failures.len().to_string(),
            report.commuting_failures.len().to_string(),
            report.is_valid().to_string(),
        ]);
        reports.push(json!({"name": rep.name(), "degree": rep.degree(), "valid": report.is_valid(), "report": report}));
    }
    let rendered = Rendered::new(
        &reports,
        vec!["name", "degree", "quadratic", "braid", "commuting", "valid"],
        rows,
    )?;
    Ok(Outcome {
        rendered,
        verified: ok,
    })
}

fn commutant(name: &str) -> Result<Rendered> {
    let rep = rep(name)?;
    let basis = commutant_basis(&rep);
    let matrices: Vec<Vec<Vec<String>>> = basis
        .iter()
        .map(|m| {
            m.to_rows()
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect()
        })
        .collect();
    let rows = matrices
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let text: Vec<String> = m.iter().map(|row| row.join(" ")).collect();
            vec![i.to_string(), text.join("; ")]
        })
        .collect();
    let value = json!({"name": rep.name(), "degree": rep.degree(), "dimension": basis.len(), "basis": matrices});
    Ok(Rendered::new(&value, vec!["index", "matrix"], rows)?
        .with_notes(vec![format!("commutant dimension {}", basis.len())]))
}

fn vectors_text(b: &SubspaceBasis<Rational>) -> String {
    b.vectors
        .iter()
        .map(|v| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn decompose_cmd(name: &str, r0: &Rational, seed: u64) -> Result<Rendered> {
    let rep = rep(name)?;
    let d = decompose(&rep, r0, seed)?;
    let rows = d
        .constituents
        .iter()
        .enumerate()
        .map(|(i, c)| {
            vec![
                i.to_string(),
                c.basis.dimension.to_string(),
                c.irreducible.to_string(),
                serde_plain(&serde_json::to_value(&c.certificate)?["kind"]),
                vectors_text(&c.basis),
            ]
            .into_iter()
            .map(Ok)
            .collect::<Result<Vec<String>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Rendered::new(
        &d,
        vec!["index", "dim", "irreducible", "certificate", "basis"],
        rows,
    )
}

fn subspaces(name: &str, r0: &Rational) -> Result<Rendered> {
    let rep = rep(name)?;
    let spaces = invariant_subspaces(&rep, r0)?;
    let rows = spaces
        .iter()
        .enumerate()
        .map(|(i, s)| vec![i.to_string(), s.dimension.to_string(), vectors_text(s)])
        .collect();
    let value = json!({"name": rep.name(), "r0": r0.to_string(), "degree": rep.degree(), "subspaces": spaces});
    Rendered::new(&value, vec!["index", "dim", "basis"], rows)
}

fn ktable() -> Result<Rendered> {
    let entries = k_table();
    let rows = entries
        .iter()
        .map(|e| {
            let k = match e.k {
                KValue::Exact(k) => k.to_string(),
                KValue::AtLeast(k) => format!(">={k}"),
            };
            vec![
                e.n.to_string(),
                e.l.to_string(),
                e.condition.to_string(),
                k,
                e.note.clone().unwrap_or_default(),
            ]
        })
        .collect();
    Rendered::new(&entries, vec!["n", "l", "condition", "k", "note"], rows)
}

fn convert_params(t: &str, r_cw: &str) -> Result<Rendered> {
    let t = parse_rational_function(t).with_context(|| format!("parsing t `{t}`"))?;
    let r_cw = parse_rational_function(r_cw).with_context(|| format!("parsing r_cw `{r_cw}`"))?;
    let p = param_convert(&t, &r_cw)?;
    let rows = vec![vec![p.l.to_string(), p.m.to_string(), p.r.to_string()]];
    Rendered::new(&p, vec!["l", "m", "r"], rows)
}

fn check(id: Option<u8>) -> Result<Outcome> {
    let results =
        match id {
            Some(id) => vec![checks::run(id)
                .ok_or_else(|| anyhow!("no check numbered {id}; expected 1..=11"))?],
            None => checks::run_all(),
        };
    let ok = results.iter().all(|r| r.passed);
    let rows = results
        .iter()
        .map(|r| {
            vec![
                r.id.to_string(),
                r.name.to_string(),
                r.passed.to_string(),
                r.detail.clone(),
            ]
        })
        .collect();
    let passed = results.iter().filter(|r| r.passed).count();
    let rendered = Rendered::new(&results, vec!["id", "name", "passed", "detail"], rows)?
        .with_notes(vec![format!("{passed}/{} passed", results.len())]);
    Ok(Outcome {
        rendered,
        verified: ok,
    })
}

pub fn corpus(write: Option<&std::path::Path>) -> Result<String> {
    let text = corpus_json();
    if let Some(path) = write {
        std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(text)
}
