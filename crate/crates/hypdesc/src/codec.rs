//! JSON encoding of tower elements and the objects built from them.
//!
//! Rationals are strings `"p/q"` in lowest terms with a positive denominator; an element of a
//! level-k tower is a pair `[a, b]` of level-(k−1) elements meaning a + b·√d_k.

use std::fmt;

use hypdesc_core::arith::{squarefree_core_int, Elem, Rational, Tower};
use hypdesc_core::binforms::{BinaryForm, Mat2, NormalForm, Shape};
use hypdesc_core::descent::{Step, TernaryForm};
use hypdesc_core::invariants::{Entry, InvariantTuple, Label};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};

#[derive(Debug)]
pub enum DocError {
    /// Malformed document or flag.
    Parse(String),
    Math(hypdesc_core::Error),
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocError::Parse(s) => write!(f, "parse error: {s}"),
            DocError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DocError {}

impl From<hypdesc_core::Error> for DocError {
    fn from(e: hypdesc_core::Error) -> DocError {
        DocError::Math(e)
    }
}

impl From<serde_json::Error> for DocError {
    fn from(e: serde_json::Error) -> DocError {
        DocError::Parse(e.to_string())
    }
}

pub type DocResult<T> = Result<T, DocError>;

pub fn bad<T>(msg: impl Into<String>) -> DocResult<T> {
    Err(DocError::Parse(msg.into()))
}

pub fn field<'a>(v: &'a Value, key: &str) -> DocResult<&'a Value> {
    v.get(key).ok_or_else(|| DocError::Parse(format!("missing field \"{key}\"")))
}

pub fn array<'a>(v: &'a Value, what: &str) -> DocResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| DocError::Parse(format!("{what}: expected an array")))
}

pub fn str_of<'a>(v: &'a Value, what: &str) -> DocResult<&'a str> {
    v.as_str().ok_or_else(|| DocError::Parse(format!("{what}: expected a string")))
}

pub fn u64_of(v: &Value, what: &str) -> DocResult<u64> {
    v.as_u64().ok_or_else(|| DocError::Parse(format!("{what}: expected a nonnegative integer")))
}

pub fn bool_of(v: &Value, what: &str) -> DocResult<bool> {
    v.as_bool().ok_or_else(|| DocError::Parse(format!("{what}: expected a boolean")))
}

/// Rejects keys outside `allowed`.
pub fn only_keys(v: &Value, allowed: &[&str], what: &str) -> DocResult<()> {
    let obj = v.as_object().ok_or_else(|| DocError::Parse(format!("{what}: expected an object")))?;
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => bad(format!("{what}: unknown field \"{k}\"")),
        None => Ok(()),
    }
}

pub fn parse_bigint(s: &str, what: &str) -> DocResult<BigInt> {
    let t = s.trim();
    let digits = t.strip_prefix('-').unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return bad(format!("{what}: \"{s}\" is not an integer"));
    }
    t.parse().map_err(|_| DocError::Parse(format!("{what}: \"{s}\" is not an integer")))
}

/// Accepts `"p/q"`, `"p"` or a JSON integer.
pub fn parse_rational(s: &str) -> DocResult<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (parse_bigint(n, "numerator")?, parse_bigint(d, "denominator")?),
        None => (parse_bigint(s, "rational")?, BigInt::from(1)),
    };
    if d.is_zero() {
        return bad(format!("zero denominator in \"{s}\""));
    }
    Ok(Rational::new(n, d))
}

pub fn rational_to_json(q: &Rational) -> Value {
    Value::String(format!("{}/{}", q.numer(), q.denom()))
}

pub fn rational_from_json(v: &Value) -> DocResult<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(BigInt::from(n.as_i64().unwrap()))),
        _ => bad(format!("expected a rational string, got {v}")),
    }
}

pub fn bigint_to_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => Value::String(n.to_string()),
    }
}

pub fn bigint_from_json(v: &Value) -> DocResult<BigInt> {
    match v {
        Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().unwrap())),
        Value::Number(n) if n.is_u64() => Ok(BigInt::from(n.as_u64().unwrap())),
        Value::String(s) => parse_bigint(s, "integer"),
        _ => bad(format!("expected an integer, got {v}")),
    }
}

pub fn tower_to_json(t: &Tower) -> Value {
    json!({ "level": t.level(), "discs": t.discs().iter().map(bigint_to_json).collect::<Vec<_>>() })
}

pub fn tower_from_json(v: &Value) -> DocResult<Tower> {
    only_keys(v, &["level", "discs"], "base")?;
    let level = u64_of(field(v, "level")?, "base.level")?;
    let discs = array(field(v, "discs")?, "base.discs")?.iter().map(bigint_from_json).collect::<DocResult<Vec<_>>>()?;
    if discs.len() as u64 != level {
        return bad(format!("base.level = {level} but {} discriminants", discs.len()));
    }
    if let Some(d) = discs.iter().find(|d| d.is_zero() || squarefree_core_int(d) != **d) {
        return bad(format!("discriminant {d} is not a squarefree integer"));
    }
    Tower::from_discs(&discs).map_err(|e| DocError::Parse(e.to_string()))
}

pub fn elem_to_json(e: &Elem) -> Value {
    if e.level() == 0 {
        rational_to_json(&e.as_rational().expect("level 0 element is rational"))
    } else {
        let (lo, hi) = e.parts();
        Value::Array(vec![elem_to_json(&lo), elem_to_json(&hi)])
    }
}

pub fn elem_from_json(t: &Tower, v: &Value) -> DocResult<Elem> {
    if t.level() == 0 {
        return Ok(Elem::from_rational(t, rational_from_json(v)?));
    }
    let pair = array(v, "element")?;
    if pair.len() != 2 {
        return bad(format!("level {} element needs two parts", t.level()));
    }
    let base = t.base();
    Ok(Elem::from_parts(t, &elem_from_json(&base, &pair[0])?, &elem_from_json(&base, &pair[1])?))
}

/// `{"base", "value"}`
pub fn scalar_to_json(e: &Elem) -> Value {
    json!({ "base": tower_to_json(e.tower()), "value": elem_to_json(e) })
}

pub fn scalar_from_json(v: &Value) -> DocResult<Elem> {
    only_keys(v, &["base", "value"], "scalar")?;
    let t = tower_from_json(field(v, "base")?)?;
    elem_from_json(&t, field(v, "value")?)
}

pub fn elems_from_json(t: &Tower, v: &Value, what: &str) -> DocResult<Vec<Elem>> {
    array(v, what)?.iter().map(|x| elem_from_json(t, x)).collect()
}

/// Coefficient fields of a form: `base`, `degree`, `coeffs` with c_i on x^i z^{N−i}.
pub fn form_fields(f: &BinaryForm) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("base".into(), tower_to_json(f.tower()));
    m.insert("degree".into(), json!(f.degree()));
    m.insert("coeffs".into(), Value::Array(f.coeffs().iter().map(elem_to_json).collect()));
    m
}

pub fn form_to_json(f: &BinaryForm) -> Value {
    Value::Object(form_fields(f))
}

/// Reads the coefficient fields, ignoring any others.
pub fn form_from_fields(v: &Value) -> DocResult<BinaryForm> {
    let t = tower_from_json(field(v, "base")?)?;
    let degree = u64_of(field(v, "degree")?, "degree")? as usize;
    let c = elems_from_json(&t, field(v, "coeffs")?, "coeffs")?;
    if c.len() != degree + 1 {
        return bad(format!("degree {degree} needs {} coefficients, got {}", degree + 1, c.len()));
    }
    if c.iter().all(|x| x.is_zero()) {
        return bad("zero form");
    }
    Ok(BinaryForm::new(c))
}

pub fn form_from_json(v: &Value) -> DocResult<BinaryForm> {
    only_keys(v, &["base", "degree", "coeffs"], "form")?;
    form_from_fields(v)
}

/// `{"base", "entries": [a, b, c, d]}` for x ↦ ax + bz, z ↦ cx + dz.
pub fn mat_to_json(m: &Mat2) -> Value {
    json!({
        "base": tower_to_json(m.tower()),
        "entries": m.entries().iter().map(|e| elem_to_json(e)).collect::<Vec<_>>(),
    })
}

pub fn mat_from_json(v: &Value) -> DocResult<Mat2> {
    only_keys(v, &["base", "entries"], "matrix")?;
    let t = tower_from_json(field(v, "base")?)?;
    let e = elems_from_json(&t, field(v, "entries")?, "entries")?;
    let [a, b, c, d]: [Elem; 4] = e.try_into().map_err(|_| DocError::Parse("matrix needs four entries".into()))?;
    let m = Mat2::new(a, b, c, d);
    if m.det().is_zero() {
        return bad("singular matrix");
    }
    Ok(m)
}

pub fn normal_form_to_json(nf: &NormalForm) -> Value {
    json!({
        "base": tower_to_json(nf.tower()),
        "shape": nf.shape.name(),
        "n": nf.n,
        "m": nf.m,
        "a": nf.a.iter().map(elem_to_json).collect::<Vec<_>>(),
    })
}

pub fn normal_form_from_json(v: &Value) -> DocResult<NormalForm> {
    only_keys(v, &["base", "shape", "n", "m", "a"], "normal form")?;
    let t = tower_from_json(field(v, "base")?)?;
    let shape_s = str_of(field(v, "shape")?, "shape")?;
    let shape = Shape::parse(shape_s).ok_or_else(|| DocError::Parse(format!("unknown shape \"{shape_s}\"")))?;
    let n = u64_of(field(v, "n")?, "n")? as u32;
    let m = u64_of(field(v, "m")?, "m")? as usize;
    let a = elems_from_json(&t, field(v, "a")?, "a")?;
    if a.len() != m + 1 || m < 1 || a[0].is_zero() || a[m].is_zero() {
        return bad("normal form needs a_0..a_m with a_0, a_m nonzero");
    }
    if n < 2 {
        return bad("normal form needs n ≥ 2");
    }
    Ok(NormalForm::new(shape, n, a))
}

pub fn ternary_to_json(f: &TernaryForm) -> Value {
    let terms: Vec<Value> =
        f.terms().map(|(e, c)| json!({ "exps": [e.0, e.1, e.2], "value": elem_to_json(c) })).collect();
    json!({ "base": tower_to_json(f.tower()), "degree": f.degree(), "terms": terms })
}

pub fn ternary_from_json(v: &Value) -> DocResult<TernaryForm> {
    only_keys(v, &["base", "degree", "terms"], "ternary form")?;
    let t = tower_from_json(field(v, "base")?)?;
    let degree = u64_of(field(v, "degree")?, "degree")? as u32;
    let mut terms = Vec::new();
    for term in array(field(v, "terms")?, "terms")? {
        only_keys(term, &["exps", "value"], "term")?;
        let e = array(field(term, "exps")?, "exps")?;
        if e.len() != 3 {
            return bad("exps needs three exponents");
        }
        let e: Vec<u32> = e.iter().map(|x| u64_of(x, "exponent").map(|k| k as u32)).collect::<DocResult<_>>()?;
        if e[0] + e[1] + e[2] != degree {
            return bad("inhomogeneous ternary term");
        }
        terms.push(((e[0], e[1], e[2]), elem_from_json(&t, field(term, "value")?)?));
    }
    Ok(TernaryForm::from_terms(&t, degree, terms))
}

pub fn step_to_json(s: &Step) -> Value {
    match s {
        Step::Mat(a) => json!({ "op": "mat", "matrix": mat_to_json(a) }),
        Step::Torus { x, y, n } => json!({ "op": "torus", "n": n, "x": scalar_to_json(x), "y": scalar_to_json(y) }),
    }
}

pub fn step_from_json(v: &Value) -> DocResult<Step> {
    match str_of(field(v, "op")?, "op")? {
        "mat" => {
            only_keys(v, &["op", "matrix"], "step")?;
            Ok(Step::Mat(mat_from_json(field(v, "matrix")?)?))
        }
        "torus" => {
            only_keys(v, &["op", "n", "x", "y"], "step")?;
            let n = u64_of(field(v, "n")?, "n")? as u32;
            let x = scalar_from_json(field(v, "x")?)?;
            let y = scalar_from_json(field(v, "y")?)?;
            if n == 0 || x.is_zero() || y.is_zero() {
                return bad("degenerate torus step");
            }
            Ok(Step::Torus { x, y, n })
        }
        op => bad(format!("unknown step op \"{op}\"")),
    }
}

pub fn chain_to_json(c: &[Step]) -> Value {
    Value::Array(c.iter().map(step_to_json).collect())
}

pub fn chain_from_json(v: &Value) -> DocResult<Vec<Step>> {
    array(v, "chain")?.iter().map(step_from_json).collect()
}

pub fn tuple_to_json(t: &InvariantTuple) -> Value {
    let entries: Vec<Value> = t
        .entries()
        .iter()
        .map(|e| json!({ "label": e.label.to_string(), "weight": e.weight, "value": scalar_to_json(&e.value) }))
        .collect();
    Value::Array(entries)
}

pub fn tuple_from_json(v: &Value) -> DocResult<InvariantTuple> {
    let mut entries = Vec::new();
    for e in array(v, "invariants")? {
        only_keys(e, &["label", "weight", "value"], "invariant")?;
        let s = str_of(field(e, "label")?, "label")?;
        let label = Label::parse(s).ok_or_else(|| DocError::Parse(format!("bad label \"{s}\"")))?;
        let weight = u64_of(field(e, "weight")?, "weight")? as u32;
        entries.push(Entry { label, weight, value: scalar_from_json(field(e, "value")?)? });
    }
    Ok(InvariantTuple::new(entries))
}
