//! Command execution and report assembly (JSON and text).

use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::almost_complex::{
    dolbeault, frolicher_degenerate, pair_label, pure_type_subgroups, verdict, verdicts_all_stages,
    AlmostComplexStructure, PureFullVerdict,
};
use crate::catalog;
use crate::cohomology::{betti_numbers, cohomology};
use crate::deformation::{deformed_iwasawa, semicontinuity_scan, DeformedIwasawa, NakamuraParameters};
use crate::dsl::{render, render_expr, DeformBlock, SpecDocument};
use crate::error::{Error, Result};
use crate::exterior::{KForm, LieAlgebraSpec};
use crate::hodge::{harmonic_basis, hlc_check, pure_degree_harmonic_criterion, InvariantMetric, SymplecticForm};

pub const SCHEMA: u64 = 1;
pub const LEVEL: &str = "invariant-level";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Betti,
    Cohomology { stage: usize },
    Decompose { stage: usize },
    /// `stage: None` means every stage.
    Verdict { stage: Option<usize> },
    Dolbeault,
    Frolicher,
    Harmonic { stage: usize },
    Hlc,
    DeformScan,
    Catalog { name: String },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Betti => "betti",
            Command::Cohomology { .. } => "cohomology",
            Command::Decompose { .. } => "decompose",
            Command::Verdict { .. } => "verdict",
            Command::Dolbeault => "dolbeault",
            Command::Frolicher => "frolicher",
            Command::Harmonic { .. } => "harmonic",
            Command::Hlc => "hlc",
            Command::DeformScan => "deform-scan",
            Command::Catalog { .. } => "catalog",
        }
    }
}

/// A finished report in both renderings.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub text: String,
}

impl Report {
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
        s.push('\n');
        s
    }
}

/// Error object for machine-readable output.
pub fn error_json(err: &Error) -> Value {
    json!({ "schema": SCHEMA, "error": { "code": err.code(), "message": err.to_string() } })
}

/// `[[indices], "scalar"]` pairs in multi-index order.
pub fn form_json(form: &KForm) -> Value {
    Value::Array(
        form.terms()
            .map(|(m, c)| json!([m.indices(), c.to_string()]))
            .collect(),
    )
}

fn digest(doc: &SpecDocument) -> String {
    let bytes = Sha256::digest(render(doc).as_bytes());
    let hex: String = bytes.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

/// The structure a document describes, after applying a Nakamura block.
struct Resolved {
    spec: LieAlgebraSpec,
    j: Option<AlmostComplexStructure>,
    nakamura: Option<DeformedIwasawa>,
}

fn resolve(doc: &SpecDocument) -> Result<Resolved> {
    let j = doc.almost_complex()?;
    if let Some(DeformBlock::Nakamura(t)) = &doc.deform {
        let base_j = j.ok_or_else(|| Error::Usage("a Nakamura block needs an almost-complex structure".into()))?;
        let def = deformed_iwasawa(&doc.spec, &base_j, t, Some(&NakamuraParameters::default_guard()))?;
        return Ok(Resolved { spec: def.spec.clone(), j: Some(def.j.clone()), nakamura: Some(def) });
    }
    Ok(Resolved { spec: doc.spec.clone(), j, nakamura: None })
}

fn require_j(r: &Resolved, command: &str) -> Result<AlmostComplexStructure> {
    r.j.clone().ok_or_else(|| Error::Usage(format!("`{command}` needs a `J` or `holo` declaration")))
}

fn check_stage(spec: &LieAlgebraSpec, stage: usize) -> Result<()> {
    if stage > spec.dim() {
        return Err(Error::Usage(format!("stage {stage} exceeds the dimension {}", spec.dim())));
    }
    Ok(())
}

fn header(command: &Command, doc: &SpecDocument) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command.name()));
    m.insert("input_digest".into(), json!(digest(doc)));
    m.insert("level".into(), json!(LEVEL));
    if !doc.warnings.is_empty() {
        m.insert("warnings".into(), json!(doc.warnings));
    }
    m
}

fn flags_json(v: &PureFullVerdict) -> Value {
    json!({
        "cinf_pure": v.cinf_pure,
        "cinf_full": v.cinf_full,
        "pure": v.pure,
        "full": v.full,
        "complex_cinf_pure": v.complex_cinf_pure,
        "complex_cinf_full": v.complex_cinf_full,
    })
}

/// `(h⁺, h⁻)`: the middle-type group and the sum of the others.
pub fn h_plus_minus(v: &PureFullVerdict) -> (usize, usize) {
    let plus = v.real_dims.iter().filter(|((p, q), _)| p == q).map(|(_, d)| d).sum();
    let minus = v.real_dims.iter().filter(|((p, q), _)| p != q).map(|(_, d)| d).sum();
    (plus, minus)
}

pub fn verdict_json(v: &PureFullVerdict) -> Value {
    let (h_plus, h_minus) = h_plus_minus(v);
    let real: Map<String, Value> = v.real_dims.iter().map(|((p, q), d)| (pair_label(*p, *q), json!(d))).collect();
    let complex: Map<String, Value> = v.complex_dims.iter().map(|((p, q), d)| (format!("({p},{q})"), json!(d))).collect();
    let witnesses: Vec<Value> = v
        .witnesses
        .iter()
        .map(|w| json!({ "flag": w.flag, "degree": w.degree, "form": form_json(&w.form) }))
        .collect();
    json!({
        "stage": v.stage,
        "betti": v.betti,
        "flags": flags_json(v),
        "h_plus": h_plus,
        "h_minus": h_minus,
        "real_dims": real,
        "complex_dims": complex,
        "witnesses": witnesses,
    })
}

fn verdict_text(out: &mut String, v: &PureFullVerdict, names: &[String]) {
    let (h_plus, h_minus) = h_plus_minus(v);
    let flag = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(
        out,
        "stage {}: b = {}, h+ = {}, h- = {} | C-pure {} C-full {} pure {} full {} | complex C-pure {} complex C-full {}",
        v.stage,
        v.betti,
        h_plus,
        h_minus,
        flag(v.cinf_pure),
        flag(v.cinf_full),
        flag(v.pure),
        flag(v.full),
        flag(v.complex_cinf_pure),
        flag(v.complex_cinf_full)
    );
    for w in &v.witnesses {
        let _ = writeln!(out, "  {} fails; witness in H^{}: {}", w.flag, w.degree, render_expr(&w.form, names));
    }
}

const HODGE_ROW: [(usize, usize); 9] = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)];

/// Runs one command on a parsed document.
pub fn run(command: &Command, doc: &SpecDocument) -> Result<Report> {
    if let Command::Catalog { name } = command {
        return catalog_report(name);
    }
    let r = resolve(doc)?;
    let spec = &r.spec;
    let names = spec.names().to_vec();
    let mut m = header(command, doc);
    let mut text = String::new();
    let _ = writeln!(text, "# {} ({LEVEL})", command.name());

    match command {
        Command::Catalog { .. } => unreachable!("handled above"),
        Command::Betti => {
            let b = betti_numbers(spec);
            let euler: i64 = b.iter().enumerate().map(|(k, x)| if k % 2 == 0 { *x as i64 } else { -(*x as i64) }).sum();
            m.insert("betti".into(), json!(b));
            m.insert("euler_characteristic".into(), json!(euler));
            let list: Vec<String> = b.iter().map(usize::to_string).collect();
            let _ = writeln!(text, "betti: {}", list.join(","));
            let _ = writeln!(text, "euler characteristic: {euler}");
        }
        Command::Cohomology { stage } => {
            check_stage(spec, *stage)?;
            let basis = cohomology(spec, *stage);
            m.insert("stage".into(), json!(stage));
            m.insert("dim".into(), json!(basis.dim()));
            m.insert("metric".into(), json!(InvariantMetric.describe()));
            m.insert("representatives".into(), Value::Array(basis.representatives().iter().map(form_json).collect()));
            let _ = writeln!(text, "H^{stage}: dimension {} (harmonic representatives, {})", basis.dim(), InvariantMetric.describe());
            for rep in basis.representatives() {
                let _ = writeln!(text, "  {}", render_expr(rep, &names));
            }
        }
        Command::Decompose { stage } => {
            check_stage(spec, *stage)?;
            let j = require_j(&r, command.name())?;
            let groups = pure_type_subgroups(spec, &j, *stage);
            let real: Vec<Value> = groups
                .real
                .iter()
                .map(|((p, q), g)| {
                    let gens = groups.basis.real_representatives(g);
                    json!({ "type": pair_label(*p, *q), "dim": g.dim(), "generators": gens.iter().map(form_json).collect::<Vec<_>>() })
                })
                .collect();
            let complex: Vec<Value> = groups
                .complex
                .iter()
                .map(|((p, q), g)| json!({ "type": format!("({p},{q})"), "dim": g.dim(), "generators": g.generators().iter().map(form_json).collect::<Vec<_>>() }))
                .collect();
            m.insert("stage".into(), json!(stage));
            m.insert("betti".into(), json!(groups.basis.dim()));
            m.insert("real".into(), Value::Array(real));
            m.insert("complex".into(), Value::Array(complex));
            let _ = writeln!(text, "H^{stage}: dimension {}", groups.basis.dim());
            for ((p, q), g) in &groups.real {
                let _ = writeln!(text, "  real {}: {}", pair_label(*p, *q), g.dim());
                for rep in groups.basis.real_representatives(g) {
                    let _ = writeln!(text, "    {}", render_expr(&rep, &names));
                }
            }
            for ((p, q), g) in &groups.complex {
                let _ = writeln!(text, "  complex ({p},{q}): {}", g.dim());
            }
        }
        Command::Verdict { stage } => {
            let j = require_j(&r, command.name())?;
            let verdicts = match stage {
                Some(k) => {
                    check_stage(spec, *k)?;
                    vec![verdict(spec, &j, *k)]
                }
                None => verdicts_all_stages(spec, &j),
            };
            m.insert("stages".into(), Value::Array(verdicts.iter().map(verdict_json).collect()));
            m.insert("all_flags".into(), json!(verdicts.iter().all(PureFullVerdict::all_flags)));
            for v in &verdicts {
                verdict_text(&mut text, v, &names);
            }
        }
        Command::Dolbeault => {
            let j = require_j(&r, command.name())?;
            let mut rows = Vec::new();
            let mut dims = Vec::new();
            for p in 0..=j.n() {
                for q in 0..=j.n() {
                    let g = dolbeault(spec, &j, p, q)?;
                    dims.push(((p, q), g.dim));
                    rows.push(json!({
                        "p": p,
                        "q": q,
                        "dim": g.dim,
                        "representatives": g.representatives.iter().map(form_json).collect::<Vec<_>>(),
                    }));
                }
            }
            m.insert("hodge_numbers".into(), Value::Array(rows));
            let _ = writeln!(text, "h^{{p,q}} (rows p, columns q):");
            for p in 0..=j.n() {
                let row: Vec<String> = dims.iter().filter(|((a, _), _)| *a == p).map(|(_, d)| d.to_string()).collect();
                let _ = writeln!(text, "  {}", row.join(" "));
            }
            if j.n() == 3 {
                let row: Vec<usize> = HODGE_ROW.iter().map(|k| dims.iter().find(|(pq, _)| pq == k).map_or(0, |(_, d)| *d)).collect();
                m.insert("table_row".into(), json!(row));
                let list: Vec<String> = row.iter().map(usize::to_string).collect();
                let _ = writeln!(text, "row (h10 h01 h20 h11 h02 h30 h21 h12 h03): {}", list.join(" "));
            }
        }
        Command::Frolicher => {
            let j = require_j(&r, command.name())?;
            let rep = frolicher_degenerate(spec, &j)?;
            m.insert("rows".into(), serde_json::to_value(&rep.rows).expect("serializable"));
            m.insert("degenerate".into(), json!(rep.degenerate));
            for row in &rep.rows {
                let rel = match row.hodge_sum.cmp(&row.betti) {
                    std::cmp::Ordering::Equal => "=",
                    std::cmp::Ordering::Greater => ">",
                    std::cmp::Ordering::Less => "<",
                };
                let _ = writeln!(text, "k = {}: sum h^{{p,q}} = {} {rel} {} = b_k", row.degree, row.hodge_sum, row.betti);
            }
            let _ = writeln!(text, "degenerates at E1: {}", rep.degenerate);
        }
        Command::Harmonic { stage } => {
            check_stage(spec, *stage)?;
            let forms = harmonic_basis(spec, *stage);
            m.insert("stage".into(), json!(stage));
            m.insert("metric".into(), json!(InvariantMetric.describe()));
            m.insert("forms".into(), Value::Array(forms.iter().map(form_json).collect()));
            let _ = writeln!(text, "harmonic {stage}-forms ({}): {}", InvariantMetric.describe(), forms.len());
            for f in &forms {
                let _ = writeln!(text, "  {}", render_expr(f, &names));
            }
            if let Some(j) = &r.j {
                let pd = pure_degree_harmonic_criterion(spec, j, *stage);
                m.insert("pure_degree".into(), serde_json::to_value(&pd).expect("serializable"));
                let _ = writeln!(text, "pure-degree harmonic representatives: {}", pd.holds);
            }
        }
        Command::Hlc => {
            let omega = doc.omega.clone().ok_or_else(|| Error::Usage("`hlc` needs an `omega` declaration".into()))?;
            if r.nakamura.is_some() {
                return Err(Error::Usage("`hlc` is not available on a Nakamura document".into()));
            }
            let w = SymplecticForm::new(spec, omega)?;
            let rep = hlc_check(spec, &w);
            m.insert("omega".into(), form_json(w.form()));
            m.insert("rows".into(), serde_json::to_value(&rep.rows).expect("serializable"));
            m.insert("holds".into(), json!(rep.holds));
            for row in &rep.rows {
                let _ = writeln!(
                    text,
                    "k = {}: H^{} -> H^{} rank {} ({} -> {}) {}",
                    row.k,
                    spec.n() - row.k,
                    spec.n() + row.k,
                    row.rank,
                    row.source_dim,
                    row.target_dim,
                    if row.isomorphism { "iso" } else { "not iso" }
                );
            }
            let _ = writeln!(text, "HLC holds: {}", rep.holds);
        }
        Command::DeformScan => deform_scan(doc, &r, &mut m, &mut text)?,
    }
    Ok(Report { json: Value::Object(m), text })
}

fn deform_scan(doc: &SpecDocument, r: &Resolved, m: &mut Map<String, Value>, text: &mut String) -> Result<()> {
    let spec = &r.spec;
    match (&doc.deform, &r.nakamura) {
        (Some(DeformBlock::Curve { l, samples }), _) => {
            let j = require_j(r, "deform-scan")?;
            let scan = semicontinuity_scan(spec, &j, l, samples, true)?;
            let rows: Vec<Value> = scan
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "t": row.t.to_string(),
                        "h_minus": row.h_minus(),
                        "h_plus": row.h_plus(),
                        "stage2": row.stage2,
                        "dual": row.dual,
                        "all_flags": row.all_flags(),
                        "stages": row.verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
                    })
                })
                .collect();
            m.insert("kind".into(), json!("curve"));
            m.insert("base_h_minus".into(), json!(scan.base_h_minus));
            m.insert("rows".into(), Value::Array(rows));
            m.insert("upper_semicontinuous".into(), json!(scan.upper_semicontinuous));
            let _ = writeln!(text, "t | h- | h+ | b2 | H^{0} middle type | all flags", spec.dim() - 2);
            for row in &scan.rows {
                let dual = row.dual.as_ref().is_some_and(|d| d.all_middle_type());
                let _ = writeln!(
                    text,
                    "{} | {} | {} | {} | {} | {}",
                    row.t,
                    row.h_minus(),
                    row.h_plus(),
                    row.stage2.betti,
                    dual,
                    row.all_flags()
                );
            }
            let _ = writeln!(text, "h- upper-semicontinuous at 0: {}", scan.upper_semicontinuous);
        }
        (Some(DeformBlock::Nakamura(_)), Some(def)) => {
            let params: Map<String, Value> = def.parameters.entries().iter().map(|(k, v)| (k.to_string(), json!(v.to_string()))).collect();
            let coeffs: Map<String, Value> = def.coefficients.named().iter().map(|(k, v)| (k.to_string(), json!(v.to_string()))).collect();
            let verdicts = verdicts_all_stages(spec, &def.j);
            let hodge = crate::almost_complex::hodge_numbers(spec, &def.j)?;
            let row: Vec<usize> = HODGE_ROW.iter().map(|k| hodge[k]).collect();
            let (h_plus, h_minus) = h_plus_minus(&verdicts[2]);
            m.insert("kind".into(), json!("nakamura"));
            m.insert("parameters".into(), Value::Object(params));
            m.insert("class".into(), json!(def.class.to_string()));
            m.insert("d".into(), json!(def.parameters.d().to_string()));
            m.insert("coefficients".into(), Value::Object(coeffs));
            // Coefficients of dφ³_t in the coframe (φ¹, φ², φ³, φ̄¹, φ̄², φ̄³).
            let psi = def.j.psi_spec(spec);
            m.insert("d_phi3".into(), form_json(psi.d_coframe(3)));
            m.insert("betti".into(), json!(betti_numbers(spec)));
            m.insert("hodge_row".into(), json!(row));
            m.insert("h_plus".into(), json!(h_plus));
            m.insert("h_minus".into(), json!(h_minus));
            m.insert("stages".into(), Value::Array(verdicts.iter().map(verdict_json).collect()));
            let _ = writeln!(text, "class {} (D = {})", def.class, def.parameters.d());
            let list: Vec<String> = row.iter().map(usize::to_string).collect();
            let _ = writeln!(text, "hodge row: {}", list.join(" "));
            let _ = writeln!(text, "h+ = {h_plus}, h- = {h_minus}");
            for v in &verdicts {
                verdict_text(text, v, spec.names());
            }
        }
        _ => return Err(Error::Usage("`deform-scan` needs a `deform` block".into())),
    }
    Ok(())
}

/// The source of a built-in catalog document.
pub fn catalog_report(name: &str) -> Result<Report> {
    let source = catalog::source(name).ok_or_else(|| Error::Usage(format!("unknown catalog entry `{name}`")))?;
    let json = json!({
        "schema": SCHEMA,
        "command": "catalog",
        "name": name,
        "document": source,
        "available": catalog::NAMES,
    });
    Ok(Report { json, text: source.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    #[test]
    fn betti_on_torus3() {
        let doc = parse(catalog::source("torus3").unwrap()).unwrap();
        let r = run(&Command::Betti, &doc).unwrap();
        assert_eq!(r.json["betti"], json!([1, 6, 15, 20, 15, 6, 1]));
        assert!(r.text.contains("betti: 1,6,15,20,15,6,1"));
        assert_eq!(r.json["schema"], json!(1));
        assert_eq!(r.json["level"], json!("invariant-level"));
    }

    #[test]
    fn dolbeault_refuses_non_integrable() {
        let doc = parse(catalog::source("n6c").unwrap()).unwrap();
        let err = run(&Command::Dolbeault, &doc).unwrap_err();
        assert_eq!(err.code(), "almost_complex::NotIntegrable");
        assert_eq!(error_json(&err)["error"]["code"], json!("almost_complex::NotIntegrable"));
    }

    #[test]
    fn stage_out_of_range() {
        let doc = parse(catalog::source("torus2").unwrap()).unwrap();
        assert_eq!(run(&Command::Cohomology { stage: 5 }, &doc).unwrap_err().code(), "cli_frontend::Usage");
    }

    #[test]
    fn form_serialization_is_sorted_pairs() {
        let f = KForm::monomial(4, &[3, 4], "1/2".parse().unwrap()).add(&KForm::monomial(4, &[1, 2], "-1".parse().unwrap()));
        assert_eq!(form_json(&f), json!([[[1, 2], "-1"], [[3, 4], "1/2"]]));
    }
}
