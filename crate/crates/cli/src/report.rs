//! Pipeline orchestration and JSON / text rendering of the results.

use std::time::Instant;

use ddgalois_core::classify::{classify_with, Classification, Constraint, GroupDescriptor};
use ddgalois_core::hypergeom::{petkovsek_riccati_with, Cardinality, Completeness};
use ddgalois_core::relations::{emit_relations_with, verify_certificate, RelationCertificate};
use ddgalois_core::summability::{discrete_residues_step, solve_telescoper_step};
use ddgalois_core::{KRatFunc, QRatFunc, Settings};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::parse::EquationInput;

pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Clone, Debug)]
pub struct Options {
    pub settings: Settings,
    pub verify: bool,
    pub step: u32,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { settings: Settings::default(), verify: true, step: 1, timings: false }
    }
}

fn constraint_json(c: &Constraint) -> Value {
    let params = match c {
        Constraint::TorsionAlpha(m) | Constraint::DetTorsion(m) => json!({ "m": m }),
        Constraint::TorsionLambda(n) => json!({ "n": n }),
        Constraint::TorsionLink { e, g_m, g_n } => json!({ "e": e, "g_m": g_m, "g_n": g_n }),
        Constraint::MonomialTorsion(m, n) | Constraint::DeltaConstMonomial(m, n) => json!({ "m": m, "n": n }),
        Constraint::UnipotentEmbedding(l) => {
            json!({ "L": l.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>() })
        }
        Constraint::DetTorsionDihedral { m, case } => json!({ "m": m, "case": case.letter() }),
        _ => json!({}),
    };
    json!({ "kind": c.kind(), "params": params })
}

pub fn group_json(g: &GroupDescriptor) -> Value {
    json!({
        "shape": g.shape.name(),
        "constraints": g.constraints.iter().map(constraint_json).collect::<Vec<_>>(),
        "components": g.components,
        "cases": g.cases,
    })
}

fn witnesses_json(cert: &RelationCertificate) -> Value {
    let mut m = Map::new();
    for (k, v) in cert.witnesses() {
        let val = match (k, v.parse::<i64>()) {
            ("m" | "n", Ok(i)) => json!(i),
            _ => json!(v),
        };
        m.insert(k.to_string(), val);
    }
    Value::Object(m)
}

fn completeness(c: Completeness) -> &'static str {
    match c {
        Completeness::Complete => "Complete",
        Completeness::PossiblyIncomplete => "PossiblyIncomplete",
    }
}

fn cardinality(c: Cardinality) -> &'static str {
    match c {
        Cardinality::Zero => "Zero",
        Cardinality::One => "One",
        Cardinality::Two => "Two",
        Cardinality::ThreeOrMore => "ThreeOrMore",
    }
}

fn input_json(eq: &EquationInput) -> Value {
    json!({ "source": eq.source, "a": eq.a.to_string(), "b": eq.b.to_string() })
}

fn relations_json(c: &Classification, opts: &Options) -> Result<Vec<Value>, CliError> {
    let certs = emit_relations_with(c, &opts.settings.limits)?;
    let mut out = Vec::with_capacity(certs.len());
    for cert in &certs {
        let verified = if opts.verify {
            let v = verify_certificate(cert, c);
            if !v.holds {
                return Err(CliError::Core(ddgalois_core::Error::InternalInconsistency(format!(
                    "certificate {} failed verification: {}",
                    cert.kind(),
                    v.reason
                ))));
            }
            Value::Bool(true)
        } else {
            Value::Null
        };
        out.push(json!({
            "kind": cert.kind(),
            "statement": cert.to_string(),
            "witnesses": witnesses_json(cert),
            "verified": verified,
        }));
    }
    Ok(out)
}

fn diagnostics_json(c: &Classification, timings: Option<Value>) -> Value {
    let mut d = json!({
        "branch": c.branch.name(),
        "ric1": completeness(c.diagnostics.ric1),
        "ric2": c.diagnostics.ric2.map(completeness),
        "number_field": c.diagnostics.number_field,
    });
    if let Some(t) = timings {
        d["timings_ms"] = t;
    }
    d
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1000.0
}

fn pipeline(eq: &EquationInput, opts: &Options, command: &str, with_groups: bool) -> Result<Value, CliError> {
    let t0 = Instant::now();
    let c = classify_with(&eq.a, &eq.b, &opts.settings)?;
    let t_classify = ms(t0);
    let t1 = Instant::now();
    let relations = relations_json(&c, opts)?;
    let t_relations = ms(t1);
    let timings = opts.timings.then(|| json!({ "classify": t_classify, "relations": t_relations }));
    let mut r = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": input_json(eq),
    });
    if with_groups {
        r["H"] = group_json(&c.h);
        r["G"] = group_json(&c.g);
    }
    r["relations"] = Value::Array(relations);
    r["diagnostics"] = diagnostics_json(&c, timings);
    Ok(r)
}

pub fn run_classify(eq: &EquationInput, opts: &Options) -> Result<Value, CliError> {
    pipeline(eq, opts, "classify", true)
}

pub fn run_relations(eq: &EquationInput, opts: &Options) -> Result<Value, CliError> {
    pipeline(eq, opts, "relations", false)
}

fn step(opts: &Options) -> Result<u32, CliError> {
    if opts.step == 0 {
        return Err(CliError::Usage("--step must be positive".into()));
    }
    Ok(opts.step)
}

pub fn run_residues(f: &QRatFunc, opts: &Options) -> Result<Value, CliError> {
    let t = step(opts)?;
    let kf: KRatFunc = f.embed();
    let table = discrete_residues_step(&kf, t, opts.settings.limits.max_factor_degree)?;
    let entries: Vec<Value> = table
        .entries()
        .iter()
        .map(|e| {
            json!({
                "orbit": e.orbit.representative.to_string(),
                "multiplicity": e.multiplicity,
                "residue": e.residue.display_in("z").to_string(),
            })
        })
        .collect();
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "command": "residues",
        "input": f.to_string(),
        "step": t,
        "summable": table.is_empty(),
        "residues": entries,
    }))
}

pub fn run_telescope(f: &QRatFunc, opts: &Options) -> Result<Value, CliError> {
    let t = step(opts)?;
    let kf: KRatFunc = f.embed();
    let g = solve_telescoper_step(&kf, t, opts.settings.limits.max_factor_degree)?;
    if let Some(g) = &g {
        if opts.verify && &g.shift(t as i64) - g != kf {
            return Err(CliError::Core(ddgalois_core::Error::InternalInconsistency(
                "telescoper solution failed substitution".into(),
            )));
        }
    }
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "command": "telescope",
        "input": f.to_string(),
        "step": t,
        "g": g.map(|g| g.to_string()),
    }))
}

pub fn run_hypergeom(eq: &EquationInput, opts: &Options) -> Result<Value, CliError> {
    let t = step(opts)?;
    let s = petkovsek_riccati_with(&eq.a, &eq.b, t, &opts.settings)?;
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "command": "hypergeom",
        "input": input_json(eq),
        "step": t,
        "solutions": s.solutions.iter().map(|u| u.to_string()).collect::<Vec<_>>(),
        "cardinality": cardinality(s.cardinality),
        "completeness": completeness(s.completeness),
        "number_field": s.field.map(|f| f.modulus().display_in("t").to_string()),
        "discarded": s.discarded.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    }))
}

pub fn error_json(input: &str, e: &CliError) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "input": input,
        "error": { "kind": e.kind(), "message": e.to_string(), "exit_code": e.exit_code() },
    })
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn group_text(g: &Value) -> String {
    let cs: Vec<String> = g["constraints"]
        .as_array()
        .map(|a| {
            a.iter()
                .map(|c| {
                    let params = c["params"].as_object().filter(|p| !p.is_empty());
                    match params {
                        Some(p) => {
                            let ps: Vec<String> = p.iter().map(|(k, v)| format!("{k}={}", text_value(v))).collect();
                            format!("{}({})", text_value(&c["kind"]), ps.join(", "))
                        }
                        None => text_value(&c["kind"]),
                    }
                })
                .collect()
        })
        .unwrap_or_default();
    format!("{} [{}] components={}", text_value(&g["shape"]), cs.join(", "), text_value(&g["components"]))
}

/// Aligned `key  value` lines for a JSON report.
pub fn render_text(v: &Value) -> String {
    let mut rows: Vec<(String, String)> = Vec::new();
    if let Some(e) = v.get("error") {
        rows.push(("input".into(), text_value(&v["input"])));
        rows.push(("error".into(), format!("{}: {}", text_value(&e["kind"]), text_value(&e["message"]))));
    } else {
        let input = &v["input"];
        rows.push(("input".into(), input.get("source").map_or_else(|| text_value(input), text_value)));
        for key in ["H", "G"] {
            if let Some(g) = v.get(key) {
                rows.push((key.into(), group_text(g)));
            }
        }
        if let Some(rs) = v.get("relations").and_then(|r| r.as_array()) {
            for r in rs {
                let mark = match r["verified"] {
                    Value::Bool(true) => "verified",
                    Value::Bool(false) => "FAILED",
                    _ => "unchecked",
                };
                rows.push(("relation".into(), format!("[{mark}] {}", text_value(&r["statement"]))));
            }
        }
        for key in ["step", "summable", "g", "cardinality", "completeness", "number_field"] {
            if let Some(x) = v.get(key) {
                rows.push((key.into(), text_value(x)));
            }
        }
        for key in ["residues", "solutions"] {
            if let Some(xs) = v.get(key).and_then(|r| r.as_array()) {
                for x in xs {
                    let s = match x {
                        Value::Object(o) => o.iter().map(|(k, v)| format!("{k}={}", text_value(v))).collect::<Vec<_>>().join(" "),
                        other => text_value(other),
                    };
                    rows.push((key.trim_end_matches('s').into(), s));
                }
            }
        }
        if let Some(d) = v.get("diagnostics").and_then(|d| d.as_object()) {
            for (k, x) in d {
                rows.push((k.clone(), text_value(x)));
            }
        }
    }
    let w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect()
}
