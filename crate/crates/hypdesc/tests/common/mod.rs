#![allow(dead_code)]

pub mod props;

use std::path::PathBuf;
use std::process::Command;

use hypdesc::FormDocument;
use hypdesc_core::arith::{Elem, Rational, Tower};
use hypdesc_core::binforms::{classify_normal_form, NormalForm};
use serde_json::Value;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(format!("{name}.json"))
}

pub fn load(name: &str) -> FormDocument {
    FormDocument::parse(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

/// Golden inputs whose form is already a normal form.
pub fn load_normal(name: &str) -> NormalForm {
    classify_normal_form(&load(name).form).unwrap().unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn qe(n: i64, d: i64) -> Elem {
    Elem::from_rational(&Tower::rationals(), q(n, d))
}

/// a + b√d over the top level of `t`.
pub fn qd(t: &Tower, a: Rational, b: Rational) -> Elem {
    let base = t.base();
    Elem::from_parts(t, &Elem::from_rational(&base, a), &Elem::from_rational(&base, b))
}

/// Runs the binary; returns (exit code, parsed stdout).
pub fn run_cli(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_hypdesc")).args(args).output().expect("binary runs");
    let code = out.status.code().expect("exit code");
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, doc)
}

pub fn run_cli_on(cmd: &str, name: &str) -> (i32, Value) {
    let p = data(name);
    run_cli(&[cmd, p.to_str().unwrap()])
}
