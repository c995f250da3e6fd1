//! Top-level documents read and written by the CLI.

use hypdesc_core::arith::Tower;
use hypdesc_core::binforms::{BinaryForm, Mat2};
use hypdesc_core::counterexamples::Certificate;
use hypdesc_core::descent::{classify_case, CaseDescriptor, ConicModel, Descent, DescentResult};
use hypdesc_core::invariants::Label;
use serde_json::{json, Map, Value};

use crate::codec::*;

pub const TOOL: &str = "hypdesc";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
/// Bumped whenever a label name or a document field changes meaning.
pub const SCHEMA_VERSION: u64 = 1;

const HEADER_KEYS: [&str; 4] = ["tool", "version", "schema", "kind"];

/// Header fields shared by every document.
pub fn header(kind: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("tool".into(), json!(TOOL));
    m.insert("version".into(), json!(VERSION));
    m.insert("schema".into(), json!(SCHEMA_VERSION));
    m.insert("kind".into(), json!(kind));
    m
}

/// Headers are optional on input; when present they must match.
fn check_header(v: &Value, kind: &str) -> DocResult<()> {
    if let Some(s) = v.get("schema") {
        if u64_of(s, "schema")? != SCHEMA_VERSION {
            return bad(format!("schema version {s} is not {SCHEMA_VERSION}"));
        }
    }
    if let Some(t) = v.get("tool") {
        if str_of(t, "tool")? != TOOL {
            return bad(format!("document written by {t}"));
        }
    }
    if let Some(k) = v.get("kind") {
        if str_of(k, "kind")? != kind {
            return bad(format!("expected a \"{kind}\" document, got {k}"));
        }
    }
    if let Some(s) = v.get("version") {
        str_of(s, "version")?;
    }
    Ok(())
}

fn keys_with_header<'a>(extra: &[&'a str]) -> Vec<&'a str> {
    HEADER_KEYS.iter().copied().chain(extra.iter().copied()).collect()
}

/// A binary form f = Σ c_i x^i z^{N−i} over a tower, with an optional known automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormDocument {
    pub form: BinaryForm,
    pub automorphism: Option<Mat2>,
}

impl FormDocument {
    pub fn new(form: BinaryForm) -> FormDocument {
        FormDocument { form, automorphism: None }
    }

    pub fn to_json(&self) -> Value {
        let mut m = header("form");
        m.extend(form_fields(&self.form));
        if let Some(a) = &self.automorphism {
            m.insert("automorphism".into(), mat_to_json(a));
        }
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> DocResult<FormDocument> {
        only_keys(v, &keys_with_header(&["base", "degree", "coeffs", "automorphism"]), "form document")?;
        check_header(v, "form")?;
        let form = form_from_fields(v)?;
        let automorphism = match v.get("automorphism") {
            Some(a) => Some(mat_from_json(a)?),
            None => None,
        };
        Ok(FormDocument { form, automorphism })
    }

    pub fn parse(s: &str) -> DocResult<FormDocument> {
        FormDocument::from_json(&serde_json::from_str(s)?)
    }

    pub fn render(&self) -> String {
        pretty(&self.to_json())
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn case_to_json(c: &CaseDescriptor) -> Value {
    json!({
        "group_type": c.group_type.to_string(),
        "shape": c.shape.name(),
        "n": c.n,
        "m": c.m,
        "genus": c.genus,
        "always_descends": c.always_descends,
        "obstruction_label": c.obstruction_label.map(|l| l.to_string()),
        "conic_eligible": c.conic_eligible,
    })
}

fn label_from_json(v: &Value) -> DocResult<Option<Label>> {
    match v {
        Value::Null => Ok(None),
        _ => {
            let s = str_of(v, "label")?;
            Label::parse(s).map(Some).ok_or_else(|| DocError::Parse(format!("bad label \"{s}\"")))
        }
    }
}

pub fn conic_to_json(c: &ConicModel) -> Value {
    json!({
        "r": rational_to_json(&c.r),
        "d": bigint_to_json(&c.d),
        "n": c.n,
        "lambda_c": rational_to_json(&c.lambda_c),
        "mu_c": rational_to_json(&c.mu_c),
        "branch_form": ternary_to_json(&c.branch_form),
        "cover": c.cover.iter().map(ternary_to_json).collect::<Vec<_>>(),
    })
}

pub fn conic_from_json(v: &Value) -> DocResult<ConicModel> {
    let cover = array(field(v, "cover")?, "cover")?;
    if cover.len() != 3 {
        return bad("conic cover needs three ternary forms");
    }
    Ok(ConicModel {
        r: rational_from_json(field(v, "r")?)?,
        d: bigint_from_json(field(v, "d")?)?,
        n: u64_of(field(v, "n")?, "n")? as u32,
        lambda_c: rational_from_json(field(v, "lambda_c")?)?,
        mu_c: rational_from_json(field(v, "mu_c")?)?,
        branch_form: ternary_from_json(field(v, "branch_form")?)?,
        cover: [ternary_from_json(&cover[0])?, ternary_from_json(&cover[1])?, ternary_from_json(&cover[2])?],
    })
}

pub fn result_to_json(r: &DescentResult) -> Value {
    match r {
        DescentResult::Model { f0, chain } => json!({
            "type": "model",
            "f0": form_to_json(f0),
            "chain": chain_to_json(chain),
        }),
        DescentResult::Conic { model, chain } => json!({
            "type": "conic",
            "conic": conic_to_json(model),
            "chain": chain_to_json(chain),
        }),
        DescentResult::Obstructed { r, d, label } => json!({
            "type": "obstructed",
            "r": rational_to_json(r),
            "d": bigint_to_json(d),
            "r_is_norm": false,
            "label": label.map(|l| l.to_string()),
        }),
    }
}

pub fn result_from_json(v: &Value) -> DocResult<DescentResult> {
    match str_of(field(v, "type")?, "type")? {
        "model" => {
            only_keys(v, &["type", "f0", "chain"], "model result")?;
            Ok(DescentResult::Model {
                f0: form_from_json(field(v, "f0")?)?,
                chain: chain_from_json(field(v, "chain")?)?,
            })
        }
        "conic" => {
            only_keys(v, &["type", "conic", "chain"], "conic result")?;
            Ok(DescentResult::Conic {
                model: conic_from_json(field(v, "conic")?)?,
                chain: chain_from_json(field(v, "chain")?)?,
            })
        }
        "obstructed" => {
            only_keys(v, &["type", "r", "d", "r_is_norm", "label"], "obstruction result")?;
            Ok(DescentResult::Obstructed {
                r: rational_from_json(field(v, "r")?)?,
                d: bigint_from_json(field(v, "d")?)?,
                label: label_from_json(v.get("label").unwrap_or(&Value::Null))?,
            })
        }
        t => bad(format!("unknown result type \"{t}\"")),
    }
}

/// The output of `descend`; `verified` records the tool's own check at write time.
pub fn descent_to_json(d: &Descent, verified: bool) -> Value {
    let mut m = header("descent");
    m.insert("normal_form".into(), normal_form_to_json(&d.normal_form));
    m.insert("case".into(), case_to_json(&d.case));
    m.insert("to_normal".into(), d.to_normal.as_ref().map(|c| chain_to_json(c)).unwrap_or(Value::Null));
    m.insert("rebuilt_from".into(), d.rebuilt_from.as_ref().map(normal_form_to_json).unwrap_or(Value::Null));
    m.insert("result".into(), result_to_json(&d.result));
    m.insert("verified".into(), json!(verified));
    Value::Object(m)
}

/// Reads a descent document back; the case descriptor is recomputed from the normal form.
pub fn descent_from_json(v: &Value) -> DocResult<Descent> {
    only_keys(
        v,
        &keys_with_header(&["normal_form", "case", "to_normal", "rebuilt_from", "result", "verified"]),
        "descent",
    )?;
    check_header(v, "descent")?;
    let normal_form = normal_form_from_json(field(v, "normal_form")?)?;
    let case = classify_case(normal_form.shape, normal_form.n, normal_form.m, normal_form.genus())?;
    let to_normal = match v.get("to_normal") {
        None | Some(Value::Null) => None,
        Some(c) => Some(chain_from_json(c)?),
    };
    let rebuilt_from = match v.get("rebuilt_from") {
        None | Some(Value::Null) => None,
        Some(nf) => Some(normal_form_from_json(nf)?),
    };
    let result = result_from_json(field(v, "result")?)?;
    Ok(Descent { normal_form, case, to_normal, rebuilt_from, result })
}

pub fn certificate_to_json(c: &Certificate) -> Value {
    json!({
        "galois_stable": c.galois_stable,
        "cocycle_r": c.cocycle_r.as_ref().map(rational_to_json),
        "r_matches_d2": c.r_matches_d2,
        "d2_is_norm": c.d2_is_norm,
        "squarefree": c.squarefree,
        "exact_cn": c.exact_cn,
        "is_counterexample": c.is_counterexample(),
    })
}

pub fn tower_of(v: &Value) -> DocResult<Tower> {
    tower_from_json(field(v, "base")?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypdesc_core::arith::Elem;

    fn sample() -> FormDocument {
        let t = Tower::quadratic(5).unwrap();
        let s = Elem::generator(&t);
        let f = BinaryForm::new(vec![Elem::frac(&t, -1, 3), s.clone(), Elem::zero(&t), Elem::one(&t)]);
        FormDocument { form: f, automorphism: Some(Mat2::new(Elem::one(&t), s, Elem::zero(&t), Elem::from_int(&t, 2))) }
    }

    #[test]
    fn form_document_round_trip() {
        let d = sample();
        let v = d.to_json();
        assert_eq!(FormDocument::from_json(&v).unwrap(), d);
        assert_eq!(FormDocument::parse(&d.render()).unwrap().to_json(), v);
        assert_eq!(v["coeffs"][0], json!(["-1/3", "0/1"]));
    }

    #[test]
    fn header_is_optional_but_checked() {
        let mut v = sample().to_json();
        let obj = v.as_object_mut().unwrap();
        for k in HEADER_KEYS {
            obj.remove(k);
        }
        assert!(FormDocument::from_json(&v).is_ok());
        v["schema"] = json!(SCHEMA_VERSION + 1);
        assert!(FormDocument::from_json(&v).is_err());
    }

    #[test]
    fn rejects_malformed_forms() {
        let base = json!({ "level": 0, "discs": [] });
        let doc = |coeffs: Value, degree: u64| json!({ "base": base, "degree": degree, "coeffs": coeffs });
        assert!(FormDocument::from_json(&doc(json!(["1/0", "1/1"]), 1)).is_err());
        assert!(FormDocument::from_json(&doc(json!(["1/1", "1/1"]), 2)).is_err());
        assert!(FormDocument::from_json(&doc(json!(["0/1", "0/1"]), 1)).is_err());
        let mut v = doc(json!(["1/1", "1/1"]), 1);
        v["extra"] = json!(1);
        assert!(FormDocument::from_json(&v).is_err());
    }
}
