use num_bigint::BigInt;
use num_traits::Zero;

use super::hilbert::{hilbert_symbol, relevant_places};
use super::integer::{int_sqrt_exact, rational_sqrt, square_class};
use super::tower::{Elem, Tower};
use super::Rational;
use crate::error::{Error, Result};

/// Whether r = x² − d y² has a rational solution, decided by local symbols.
pub fn is_norm(r: &Rational, d: &BigInt) -> bool {
    assert!(!r.is_zero(), "is_norm of zero");
    let dq = Rational::from_integer(d.clone());
    if rational_sqrt(&dq).is_some() {
        return true;
    }
    let places = relevant_places(&[r, &dq]);
    let mut product = 1;
    let mut all = true;
    for v in &places {
        let s = hilbert_symbol(&dq, r, v);
        product *= s;
        all &= s == 1;
    }
    assert_eq!(product, 1, "Hilbert product formula violated for ({d}, {r})");
    all
}

/// Some λ ∈ Q(√d) with norm r, or `None` when r is not a norm.
pub fn solve_norm(r: &Rational, d: &BigInt) -> Option<Elem> {
    if !is_norm(r, d) {
        return None;
    }
    let tower = Tower::rationals().extend(d).ok()?;
    let d = tower.top_disc().expect("level 1").clone();
    // r = c t² with c squarefree
    let c = square_class(r);
    let t2 = r / Rational::from_integer(c.clone());
    let t = rational_sqrt(&t2).expect("r / core(r) is a square");
    let mut bound: i64 = 8;
    loop {
        for z in 1..=bound {
            let cz2 = &c * BigInt::from(z) * BigInt::from(z);
            for y in 0..=bound {
                let x2 = &cz2 + &d * BigInt::from(y) * BigInt::from(y);
                if let Some(x) = int_sqrt_exact(&x2) {
                    let lo = Elem::from_rational(&tower, Rational::from_integer(x));
                    let hi = Elem::from_rational(&tower, Rational::from_integer(BigInt::from(y)));
                    let lam = &(&lo + &(&hi * &Elem::generator(&tower)))
                        * &Elem::from_rational(&tower, &t / Rational::from_integer(BigInt::from(z)));
                    debug_assert_eq!(lam.field_norm().ok()?.as_rational().as_ref(), Some(r));
                    return Some(lam);
                }
            }
        }
        bound *= 2;
    }
}

/// μ with σ(μ)/μ = c for an element c of norm 1.
pub fn hilbert90(c: &Elem) -> Result<Elem> {
    let n = c.field_norm()?;
    if !n.is_one() {
        return Err(Error::NotNormOne);
    }
    let mu = Elem::one(c.tower()) + c.conj()?;
    if mu.is_zero() {
        return Ok(Elem::generator(c.tower()));
    }
    Ok(mu)
}

/// r1 and r2 differ by a norm from Q(√d).
pub fn same_norm_class(r1: &Rational, r2: &Rational, d: &BigInt) -> bool {
    is_norm(&(r1 / r2), d)
}
