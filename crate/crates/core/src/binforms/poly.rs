//! Dense univariate polynomials over a tower field, lowest degree first.
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{Elem, Rational, Tower};

pub fn trim(mut p: Vec<Elem>) -> Vec<Elem> {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

pub fn derivative(p: &[Elem]) -> Vec<Elem> {
    p.iter().enumerate().skip(1).map(|(i, c)| c * &Elem::from_int(c.tower(), i as i64)).collect()
}

fn mul_int(a: &[BigInt], b: &[BigInt], discs: &[BigInt]) -> Vec<BigInt> {
    if discs.is_empty() {
        return alloc::vec![&a[0] * &b[0]];
    }
    let h = a.len() / 2;
    let base = &discs[..discs.len() - 1];
    let d = &discs[discs.len() - 1];
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    let mut out = mul_int(a0, b0, base);
    for (o, x) in out.iter_mut().zip(mul_int(a1, b1, base)) {
        *o += x * d;
    }
    let mut hi = mul_int(a0, b1, base);
    for (o, x) in hi.iter_mut().zip(mul_int(a1, b0, base)) {
        *o += x;
    }
    out.extend(hi);
    out
}

/// Integer coordinates over a common denominator.
fn cleared(p: &[Elem], t: &Tower) -> (Vec<Vec<BigInt>>, BigInt) {
    let lifted: Vec<Elem> = p.iter().map(|c| if c.tower() == t { c.clone() } else { c.lift(t) }).collect();
    let mut den = BigInt::one();
    for c in &lifted {
        for x in c.coords() {
            den = den.lcm(x.denom());
        }
    }
    let ints = lifted.iter().map(|c| c.coords().iter().map(|x| x.numer() * (&den / x.denom())).collect()).collect();
    (ints, den)
}

pub fn mul(a: &[Elem], b: &[Elem], t: &Tower) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (ai, da) = cleared(a, t);
    let (bi, db) = cleared(b, t);
    let den = da * db;
    let mut out = alloc::vec![alloc::vec![BigInt::zero(); t.dim()]; a.len() + b.len() - 1];
    for (i, x) in ai.iter().enumerate() {
        if x.iter().all(Zero::is_zero) {
            continue;
        }
        for (j, y) in bi.iter().enumerate() {
            if y.iter().all(Zero::is_zero) {
                continue;
            }
            for (o, v) in out[i + j].iter_mut().zip(mul_int(x, y, t.discs())) {
                *o += v;
            }
        }
    }
    out.into_iter()
        .map(|c| Elem::from_coords(t, c.into_iter().map(|n| Rational::new(n, den.clone())).collect()))
        .collect()
}

fn rem(a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut r = trim(a.to_vec());
    let lead = b.last().expect("nonzero divisor").inv();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let q = &r[r.len() - 1] * &lead;
        for (j, y) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&q * y);
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Monic gcd.
pub fn gcd(a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last() {
        let li = l.inv();
        x = x.iter().map(|c| c * &li).collect();
    }
    x
}
