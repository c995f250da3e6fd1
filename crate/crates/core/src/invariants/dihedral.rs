use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::diagonal::{degree, eval_monomial, swap_conjugate, Monomial, Schema};
use super::label::{Key, Label};
use super::tuple::{Entry, InvariantTuple};
use crate::arith::{Elem, Rational};
use crate::binforms::{NormalForm, Shape};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DihedralExpr {
    /// A reflection-symmetric J.
    Pass(Monomial),
    Sum(Monomial),
    Prod(Monomial),
    Mix(Monomial, Monomial),
}

impl DihedralExpr {
    pub fn eval(&self, a: &[Elem]) -> Elem {
        match self {
            DihedralExpr::Pass(j) => eval_monomial(j, a),
            DihedralExpr::Sum(j) => eval_monomial(j, a) + eval_monomial(&swap_conjugate(j), a),
            DihedralExpr::Prod(j) => eval_monomial(j, a) * eval_monomial(&swap_conjugate(j), a),
            DihedralExpr::Mix(s, t) => {
                eval_monomial(s, a) * eval_monomial(&swap_conjugate(t), a)
                    + eval_monomial(&swap_conjugate(s), a) * eval_monomial(t, a)
            }
        }
    }
}

/// Symmetrization of a diagonal schema: labels, weights, expressions.
pub fn dihedral_schema(schema: &Schema) -> Vec<(Label, u32, DihedralExpr)> {
    let mut out = Vec::new();
    let mut asym: Vec<(Key, Monomial)> = Vec::new();
    for (l, mono) in &schema.monomials {
        let w = degree(mono);
        match l {
            Label::J1 => out.push((Label::I1, w, DihedralExpr::Pass(mono.clone()))),
            Label::J2(i) => out.push((Label::I2(*i), w, DihedralExpr::Pass(mono.clone()))),
            Label::J(k) => {
                out.push((Label::ISum(*k), w, DihedralExpr::Sum(mono.clone())));
                out.push((Label::IProd(*k), 2 * w, DihedralExpr::Prod(mono.clone())));
                asym.push((*k, mono.clone()));
            }
            _ => unreachable!("diagonal schemas only hold J labels"),
        }
    }
    for i in 0..asym.len() {
        for j in i + 1..asym.len() {
            let (ks, s) = &asym[i];
            let (kt, t) = &asym[j];
            let w = degree(s) + degree(t);
            out.push((Label::IMix(*ks.min(kt), *ks.max(kt)), w, DihedralExpr::Mix(s.clone(), t.clone())));
        }
    }
    out
}

pub fn dihedral_invariants_with(schema: &Schema, a: &[Elem]) -> InvariantTuple {
    InvariantTuple::new(
        dihedral_schema(schema)
            .into_iter()
            .map(|(label, weight, e)| Entry { label, weight, value: e.eval(a) })
            .collect(),
    )
}

/// The arithmetic dihedral invariants I; cform1 has no reflection and is rejected.
pub fn dihedral_invariants(nf: &NormalForm) -> Result<InvariantTuple> {
    if nf.shape == Shape::CForm1 {
        return Err(Error::Inconsistent(String::from("cform1 has no dihedral symmetrization")));
    }
    let schema = Schema::for_form(nf)?;
    Ok(dihedral_invariants_with(&schema, &nf.a))
}

fn disc_of(i: &InvariantTuple, k: &Key) -> Option<Elem> {
    let s = i.get(&Label::ISum(*k))?;
    let p = i.get(&Label::IProd(*k))?;
    Some(s * s - p * &Elem::from_int(p.tower(), 4))
}

/// Square class d of the first nonzero I_{t,t,1}² − 4 I_{t,t,2} and its t, or (1, None).
pub fn extension_data(i: &InvariantTuple) -> Result<(BigInt, Option<Key>)> {
    for l in i.labels() {
        if let Label::ISum(k) = l {
            let disc = disc_of(i, &k).ok_or_else(|| Error::Inconsistent(format!("I_{k},{k},2 missing")))?;
            if disc.is_zero() {
                continue;
            }
            let q = disc
                .as_rational()
                .ok_or_else(|| Error::Inconsistent(String::from("extension data needs a rational tuple")))?;
            return Ok((crate::arith::square_class(&q), Some(k)));
        }
    }
    Ok((BigInt::one(), None))
}

/// J over k(√d) with J_{t₀} = (I_{t₀,t₀,1} + √disc)/2 and the rest from the linear system.
pub fn split_dihedral(i: &InvariantTuple, d: &BigInt) -> Result<InvariantTuple> {
    let base = i.tower();
    let (d0, t0) = extension_data(i)?;
    if &d0 != d {
        if d.is_one() {
            return Err(Error::Inconsistent(format!("tuple does not split over the base: class {d0}")));
        }
        return Err(Error::Inconsistent(format!("extension class {d0} differs from {d}")));
    }
    let tower = if d.is_one() { base.clone() } else { base.extend(d)? };
    let i = i.lift(&tower);
    let half = Elem::from_rational(&tower, Rational::new(1.into(), 2.into()));
    let mut out: Vec<Entry> = Vec::new();
    let keys: Vec<Key> =
        i.labels().into_iter().filter_map(|l| if let Label::ISum(k) = l { Some(k) } else { None }).collect();
    let (jt0, jt0c) = match t0 {
        Some(k0) => {
            let disc = disc_of(&i, &k0).expect("checked above");
            let r = disc.sqrt().ok_or_else(|| Error::Internal(String::from("discriminant has no root in k(√d)")))?;
            let s = i.get(&Label::ISum(k0)).expect("present");
            (Some((k0, &(s + &r) * &half)), Some(&(s - &r) * &half))
        }
        None => (None, None),
    };
    for e in i.entries() {
        match e.label {
            Label::I1 => out.push(Entry { label: Label::J1, weight: e.weight, value: e.value.clone() }),
            Label::I2(k) => out.push(Entry { label: Label::J2(k), weight: e.weight, value: e.value.clone() }),
            _ => {}
        }
    }
    for k in keys {
        let s = i.get(&Label::ISum(k)).expect("present");
        let w = i.weight_of(&Label::ISum(k)).expect("present");
        let value = match (&jt0, &jt0c) {
            (Some((k0, j0)), Some(j0c)) if *k0 == k => j0.clone(),
            (Some((k0, j0)), Some(j0c)) => {
                let mix = i
                    .get(&Label::IMix(*k0.min(&k), *k0.max(&k)))
                    .ok_or_else(|| Error::Inconsistent(format!("I_{k0},{k} missing")))?;
                // J'_{t₀} J_t + J_{t₀}(S_t − J_t) = I_{t₀,t}
                (mix - &(j0 * s)) / (j0c - j0)
            }
            _ => s * &half,
        };
        out.push(Entry { label: Label::J(k), weight: w, value });
    }
    Ok(InvariantTuple::new(out))
}
