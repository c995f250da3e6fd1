//! Reduction of tower elements modulo degree-one primes, for fast certificates.
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Elem, Rational, Tower};

/// The largest primes below 2³¹.
pub const PRIMES: [u64; 24] = [
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543, 2147483497, 2147483489,
    2147483477, 2147483423, 2147483399, 2147483353, 2147483323, 2147483269, 2147483249, 2147483237, 2147483179,
    2147483171, 2147483137, 2147483123, 2147483077, 2147483069, 2147483059,
];

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Tonelli–Shanks for an odd prime p; `None` for non-residues.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = t2 * t2 % p;
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    Some(r)
}

fn int_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue below p")
}

fn rational_mod(q: &Rational, p: u64) -> Option<u64> {
    let d = int_mod(q.denom(), p);
    if d == 0 {
        return None;
    }
    Some(int_mod(q.numer(), p) * inv_mod(d, p) % p)
}

/// A ring map from the p-integral part of a tower onto F_p.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub p: u64,
    /// Images of √d_1, √d_2, …
    roots: Vec<u64>,
}

impl Reduction {
    /// `None` when some discriminant is zero or a non-square mod p.
    pub fn new(t: &Tower, p: u64) -> Option<Reduction> {
        let mut roots = Vec::new();
        for d in t.discs() {
            let r = int_mod(d, p);
            if r == 0 {
                return None;
            }
            roots.push(sqrt_mod(r, p)?);
        }
        Some(Reduction { p, roots })
    }

    /// `None` when a coordinate has p in its denominator.
    pub fn apply(&self, e: &Elem) -> Option<u64> {
        self.reduce(e.coords(), e.level())
    }

    fn reduce(&self, c: &[Rational], level: usize) -> Option<u64> {
        if level == 0 {
            return rational_mod(&c[0], self.p);
        }
        let h = c.len() / 2;
        let lo = self.reduce(&c[..h], level - 1)?;
        let hi = self.reduce(&c[h..], level - 1)?;
        Some((lo + self.roots[level - 1] * hi) % self.p)
    }
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let lead = inv_mod(*b.last().expect("nonzero divisor"), p);
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let q = r[r.len() - 1] * lead % p;
        for (j, y) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - q * y % p) % p;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Degree of gcd(a, b) over F_p.
pub fn gcd_degree(a: &[u64], b: &[u64], p: u64) -> usize {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x.len().saturating_sub(1)
}

/// True when some reduction keeps the degree and is squarefree, which proves p(x) squarefree.
/// False is inconclusive.
pub fn certifies_squarefree(p: &[Elem]) -> bool {
    let Some(top) = p.last() else { return false };
    let t = top.tower().clone();
    let n = p.len() as u64;
    for &q in PRIMES.iter() {
        if q <= n {
            continue;
        }
        let Some(red) = Reduction::new(&t, q) else { continue };
        let Some(v) = p.iter().map(|c| red.apply(c)).collect::<Option<Vec<u64>>>() else { continue };
        if v.last() == Some(&0) {
            continue;
        }
        let dv: Vec<u64> = v.iter().enumerate().skip(1).map(|(i, c)| c * i as u64 % q).collect();
        if gcd_degree(&v, &dv, q) == 0 {
            return true;
        }
    }
    false
}
