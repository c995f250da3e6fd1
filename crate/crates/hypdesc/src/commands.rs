//! The subcommands as library functions returning a document and an exit code.

use hypdesc_core::arith::{is_norm, Elem, Rational, Tower};
use hypdesc_core::binforms::Shape;
use hypdesc_core::counterexamples::{build_family, middle_from_tau, CounterexampleParams, FamilyShape};
use hypdesc_core::descent::{cocycle, descend, normalize_input, shape_invariants, verify, CocycleKind, DescentResult};
use hypdesc_core::invariants::{extension_data, invariant_algebra_generators, wp_normalize};
use hypdesc_core::Error;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::codec::*;
use crate::documents::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NO_NORMAL_FORM: i32 = 3;
/// Any other mathematical failure, e.g. a field of moduli larger than k.
pub const EXIT_MATH: i32 = 4;
pub const EXIT_OBSTRUCTED: i32 = 10;

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub doc: Value,
    pub code: i32,
}

pub fn exit_code(e: &DocError) -> i32 {
    match e {
        DocError::Parse(_) => EXIT_USAGE,
        DocError::Math(Error::NoNormalForm) => EXIT_NO_NORMAL_FORM,
        DocError::Math(_) => EXIT_MATH,
    }
}

pub fn error_document(e: &DocError) -> Value {
    let mut m = header("error");
    m.insert("code".into(), json!(exit_code(e)));
    m.insert("message".into(), json!(e.to_string()));
    Value::Object(m)
}

pub fn cmd_invariants(input: &FormDocument, normalize: bool) -> DocResult<Outcome> {
    let (_, nf) = normalize_input(&input.form, input.automorphism.as_ref())?;
    let raw = shape_invariants(&nf)?;
    let tuple = if normalize { wp_normalize(&raw)? } else { raw };
    let mut m = header("invariants");
    m.insert("normal_form".into(), normal_form_to_json(&nf));
    m.insert("family".into(), json!(if nf.shape == Shape::CForm1 { "diagonal" } else { "dihedral" }));
    m.insert("normalized".into(), json!(normalize));
    m.insert("invariants".into(), tuple_to_json(&tuple));
    Ok(Outcome { doc: m.into(), code: EXIT_OK })
}

pub fn cmd_descend(input: &FormDocument) -> DocResult<Outcome> {
    let d = descend(&input.form, input.automorphism.as_ref())?;
    let ok = verify(&input.form, &d);
    let code = match (&d.result, ok) {
        (_, false) => EXIT_VERIFY_FAILED,
        (DescentResult::Obstructed { .. }, true) => EXIT_OBSTRUCTED,
        _ => EXIT_OK,
    };
    Ok(Outcome { doc: descent_to_json(&d, ok), code })
}

/// Cocycle, extension data and verdict without the model.
pub fn cmd_obstruction(input: &FormDocument) -> DocResult<Outcome> {
    let d = descend(&input.form, input.automorphism.as_ref())?;
    let nf = &d.normal_form;
    let co = cocycle(nf)?;
    let cocycle_doc = json!({
        "type": match co.kind { CocycleKind::Diagonal => "diagonal", CocycleKind::Antidiagonal => "antidiagonal" },
        "r": co.r.as_ref().map(rational_to_json),
        "d": bigint_to_json(&co.d),
        "r_is_norm": co.r.as_ref().map(|r| is_norm(r, &co.d)),
    });
    let extension = if nf.shape == Shape::CForm1 {
        Value::Null
    } else {
        match wp_normalize(&shape_invariants(nf)?).and_then(|i| extension_data(&i)) {
            Ok((e, key)) => json!({ "d": bigint_to_json(&e), "key": key.map(|k| k.to_string()) }),
            Err(_) => Value::Null,
        }
    };
    let obstructed = !matches!(d.result, DescentResult::Model { .. });
    let mut m = header("obstruction");
    m.insert("normal_form".into(), normal_form_to_json(nf));
    m.insert("case".into(), case_to_json(&d.case));
    m.insert("cocycle".into(), cocycle_doc);
    m.insert("extension".into(), extension);
    m.insert("hyperelliptic_obstructed".into(), json!(obstructed));
    m.insert("conic_model".into(), json!(matches!(d.result, DescentResult::Conic { .. })));
    m.insert("label".into(), json!(d.case.obstruction_label.filter(|_| obstructed).map(|l| l.to_string())));
    let code = if obstructed { EXIT_OBSTRUCTED } else { EXIT_OK };
    Ok(Outcome { doc: m.into(), code })
}

/// Flags of `counterexample`; elements are JSON (`[a, b]` over k(√d1)) or rationals.
#[derive(Clone, Debug)]
pub struct CounterexampleArgs {
    pub d1: String,
    pub d2: String,
    pub n: u32,
    pub ell: usize,
    pub u: String,
    pub upper: Option<String>,
    pub xz: bool,
    pub seed: u64,
}

/// An element of `t` from a flag value.
pub fn parse_elem_arg(t: &Tower, s: &str) -> DocResult<Elem> {
    match serde_json::from_str::<Value>(s) {
        Ok(Value::Array(a)) => elem_from_json(t, &Value::Array(a)),
        Ok(v @ (Value::String(_) | Value::Number(_))) => Ok(Elem::from_rational(t, rational_from_json(&v)?)),
        _ => Ok(Elem::from_rational(t, parse_rational(s)?)),
    }
}

fn small(rng: &mut ChaCha8Rng, t: &Tower) -> Elem {
    let base = Tower::rationals();
    Elem::from_parts(t, &Elem::from_int(&base, rng.gen_range(-9..=9)), &Elem::from_int(&base, rng.gen_range(-9..=9)))
}

pub fn cmd_counterexample(a: &CounterexampleArgs) -> DocResult<Outcome> {
    let usage = |e: Error| DocError::Parse(e.to_string());
    let d1 = parse_bigint(&a.d1, "--d1")?;
    let t = Tower::from_discs(std::slice::from_ref(&d1)).map_err(usage)?;
    if t.top_disc() != Some(&d1) {
        return bad("--d1 must be squarefree");
    }
    let d2 = parse_rational(&a.d2)?;
    if d2 == Rational::from_integer(BigInt::from(0)) {
        return bad("--d2 must be nonzero");
    }
    if a.n < 2 || a.ell < 1 {
        return bad("need --n ≥ 2 and --l ≥ 1");
    }
    let u = parse_elem_arg(&t, &a.u)?;
    let shape = if a.xz { FamilyShape::Xz } else { FamilyShape::Plain };
    let mut params = CounterexampleParams { d1, d2, u, n: a.n, ell: a.ell, upper: Vec::new(), shape };
    let (nf, cert) = match &a.upper {
        Some(s) => {
            let v: Value = serde_json::from_str(s)?;
            params.upper = elems_from_json(&t, &v, "--upper")?;
            build_family(&params).map_err(usage)?
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            let mut found = None;
            for _ in 0..256 {
                let mut upper: Vec<Elem> = (0..a.ell).map(|_| small(&mut rng, &t)).collect();
                upper.push(middle_from_tau(&small(&mut rng, &t), &params.u).map_err(usage)?);
                params.upper = upper;
                if let Ok(r) = build_family(&params) {
                    if r.1.galois_stable && r.1.exact_cn {
                        found = Some(r);
                        break;
                    }
                }
            }
            found.ok_or_else(|| DocError::Parse("no admissible family member for these flags".into()))?
        }
    };
    let mut m = header("counterexample");
    m.insert(
        "params".into(),
        json!({
            "d1": bigint_to_json(&params.d1),
            "d2": rational_to_json(&params.d2),
            "u": elem_to_json(&params.u),
            "n": params.n,
            "l": params.ell,
            "shape": if a.xz { "xz" } else { "plain" },
            "upper": params.upper.iter().map(elem_to_json).collect::<Vec<_>>(),
        }),
    );
    m.insert("normal_form".into(), normal_form_to_json(&nf));
    m.insert("form".into(), FormDocument::new(nf.to_form()).to_json());
    m.insert("certificate".into(), certificate_to_json(&cert));
    Ok(Outcome { doc: m.into(), code: EXIT_OK })
}

pub fn cmd_gens(m: usize) -> DocResult<Outcome> {
    if m < 1 {
        return bad("--m must be at least 1");
    }
    let g = invariant_algebra_generators(m);
    let mut doc = header("generators");
    doc.insert("m".into(), json!(m));
    doc.insert("count".into(), json!(g.len()));
    doc.insert("monomials".into(), json!(g));
    Ok(Outcome { doc: doc.into(), code: EXIT_OK })
}

/// Re-checks a descent document against its input form.
pub fn cmd_verify(input: &FormDocument, output: &Value) -> DocResult<Outcome> {
    let d = descent_from_json(output)?;
    let valid = verify(&input.form, &d);
    let mut m = header("verification");
    m.insert("valid".into(), json!(valid));
    Ok(Outcome { doc: m.into(), code: if valid { EXIT_OK } else { EXIT_VERIFY_FAILED } })
}
