use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::diagonal::Schema;
use super::label::Label;
use super::tuple::InvariantTuple;
use crate::arith::Elem;
use crate::binforms::{NormalForm, Shape};
use crate::error::{Error, Result};
use crate::lattice::express;

/// A normal form with diagonal invariants `j`, its w-monomial set to `t` (default 1).
pub fn reconstruct(j: &InvariantTuple, schema: &Schema, shape: Shape, n: u32, t: Option<&Elem>) -> Result<NormalForm> {
    let tower = j.tower();
    let t = t.cloned().unwrap_or_else(|| Elem::one(&tower));
    let t = if t.tower().is_prefix_of(&tower) { t.lift(&tower) } else { t };
    let tower = t.tower().clone();
    let m = schema.m;
    let mut a = vec![Elem::zero(&tower); m + 1];
    let get = |l: &Label| -> Result<Elem> {
        j.get(l).map(|v| v.lift(&tower)).ok_or_else(|| Error::Inconsistent(format!("{l} missing from the tuple")))
    };
    let k = schema.s.len();
    let mut frame: Vec<Vec<i64>> = schema.basis.clone();
    frame.push(schema.complement.clone());
    let basis_values: Vec<Elem> = schema.basis_labels.iter().map(&get).collect::<Result<_>>()?;
    for (pos, &s) in schema.s.indices.iter().enumerate() {
        let mut e = vec![0i64; k];
        e[pos] = 1;
        let x = express(&e, &frame)?;
        let mut v = t.pow(x[k - 1]);
        for (c, b) in x[..k - 1].iter().zip(&basis_values) {
            if *c != 0 {
                if b.is_zero() {
                    return Err(Error::Inconsistent(format!("basis invariant of a_{s} vanishes")));
                }
                v = v * b.pow(*c);
            }
        }
        a[s] = v;
    }
    for (l, _) in &schema.monomials {
        match l {
            Label::J1 => a[m / 2] = get(l)?,
            Label::J2(i) => {
                let (hi, lo) = (m - i, *i);
                let val = get(l)?;
                let known_hi = schema.s.indices.contains(&hi);
                let known_lo = schema.s.indices.contains(&lo);
                if known_hi && !known_lo {
                    a[lo] = &val / &a[hi];
                } else if known_lo && !known_hi {
                    a[hi] = &val / &a[lo];
                } else if !known_hi && !known_lo {
                    return Err(Error::Inconsistent(format!("no index of {l} in S")));
                }
            }
            _ => {}
        }
    }
    let nf = NormalForm::new(shape, n, a);
    let back = schema.evaluate(&nf.a);
    let expect =
        j.select(&back.labels()).ok_or_else(|| Error::Inconsistent(String::from("tuple does not match the schema")))?;
    if back != expect.lift(&tower) {
        return Err(Error::Internal(String::from("reconstructed form has different invariants")));
    }
    Ok(nf)
}
