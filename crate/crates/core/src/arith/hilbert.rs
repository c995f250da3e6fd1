use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::integer::{factor, valuation};
use super::Rational;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Prime(BigUint),
    Infinity,
}

impl Place {
    pub fn prime(p: u64) -> Place {
        Place::Prime(BigUint::from(p))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

fn to_int(q: &Rational) -> BigInt {
    q.numer() * q.denom()
}

/// Legendre symbol (u/p) for odd p not dividing u.
fn legendre(u: &BigInt, p: &BigUint) -> i32 {
    let pi = BigInt::from(p.clone());
    let u = u.mod_floor(&pi).to_biguint().expect("nonnegative residue");
    let e = (p - BigUint::one()) >> 1;
    if u.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

fn mod8(u: &BigInt) -> u32 {
    u.mod_floor(&BigInt::from(8)).to_u32().expect("residue")
}

/// Quadratic Hilbert symbol (a, b)_v over Q.
pub fn hilbert_symbol(a: &Rational, b: &Rational, place: &Place) -> i32 {
    assert!(!a.is_zero() && !b.is_zero(), "Hilbert symbol of zero");
    let p = match place {
        Place::Infinity => {
            return if a.is_negative() && b.is_negative() { -1 } else { 1 };
        }
        Place::Prime(p) => p,
    };
    let (alpha, u) = valuation(&to_int(a), p);
    let (beta, v) = valuation(&to_int(b), p);
    if *p == BigUint::from(2u32) {
        let eps = |x: &BigInt| ((mod8(x) - 1) / 2) % 2;
        let omega = |x: &BigInt| {
            let r = mod8(x);
            ((r * r - 1) / 8) % 2
        };
        let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
        return if e % 2 == 0 { 1 } else { -1 };
    }
    let mut s = 1;
    let eps_p = ((p - BigUint::one()) >> 1u32) % BigUint::from(2u32);
    if (alpha * beta) % 2 == 1 && eps_p.is_one() {
        s = -s;
    }
    if beta % 2 == 1 {
        s *= legendre(&u, p);
    }
    if alpha % 2 == 1 {
        s *= legendre(&v, p);
    }
    s
}

/// The places where (a, b) can be nontrivial: ∞, 2 and the primes of a and b.
pub fn relevant_places(values: &[&Rational]) -> Vec<Place> {
    let mut n = BigUint::from(2u32);
    for q in values {
        n *= q.numer().magnitude() * q.denom().magnitude();
    }
    let mut out: Vec<Place> = factor(&n).into_iter().map(|(p, _)| Place::Prime(p)).collect();
    out.push(Place::Infinity);
    out
}
