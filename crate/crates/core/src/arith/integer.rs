use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

const SMALL_PRIMES: [u32; 25] =
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

/// Miller-Rabin with the first 25 prime bases; deterministic far beyond any input used here.
pub fn is_prime(n: &BigUint) -> bool {
    if *n < BigUint::from(2u32) {
        return false;
    }
    for &p in SMALL_PRIMES.iter() {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in SMALL_PRIMES.iter() {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint, c: u64) -> Option<BigUint> {
    let one = BigUint::one();
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let mut y = BigUint::from(2u32);
    let mut r: u64 = 1;
    let m: u64 = 64;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
        if r > (1 << 26) {
            return None;
        }
    }
    if g == *n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if g != one {
                break;
            }
        }
    }
    if g == *n {
        None
    } else {
        Some(g)
    }
}

fn split_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let r = n.sqrt();
    if &r * &r == n {
        split_into(r.clone(), out);
        split_into(r, out);
        return;
    }
    for c in 1..64u64 {
        if let Some(g) = pollard_brent(&n, c) {
            let rest = &n / &g;
            split_into(g, out);
            split_into(rest, out);
            return;
        }
    }
    panic!("factorization failed for {}", n);
}

/// Prime factorization of a positive integer, primes ascending.
pub fn factor(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut primes = Vec::new();
    if n.is_zero() {
        return Vec::new();
    }
    let mut p = 2u32;
    while p < 10_000 {
        let bp = BigUint::from(p);
        if &bp * &bp > n {
            break;
        }
        while (&n % &bp).is_zero() {
            primes.push(bp.clone());
            n /= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    split_into(n, &mut primes);
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

/// Squarefree part of a nonzero integer, sign kept.
pub fn squarefree_core_int(n: &BigInt) -> BigInt {
    assert!(!n.is_zero(), "squarefree core of zero");
    let mut core = BigInt::one();
    for (p, e) in factor(n.magnitude()) {
        if e % 2 == 1 {
            core *= BigInt::from(p);
        }
    }
    if n.is_negative() {
        -core
    } else {
        core
    }
}

/// Square class representative of a nonzero rational: the squarefree core of num·den.
pub fn square_class(q: &Rational) -> BigInt {
    squarefree_core_int(&(q.numer() * q.denom()))
}

pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Nonnegative rational square root when it exists.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = int_sqrt_exact(q.numer())?;
    let d = int_sqrt_exact(q.denom())?;
    Some(Rational::new(n, d))
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: &BigUint) -> (u32, BigInt) {
    let p = BigInt::from_biguint(Sign::Plus, p.clone());
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return (v, n);
        }
        n = q;
        v += 1;
    }
}

/// Extended gcd over i64 vectors: coefficients c with Σ c_i a_i = gcd(a).
pub fn ext_gcd_vec(a: &[i64]) -> (i64, Vec<i64>) {
    let mut g = 0i64;
    let mut coeffs: Vec<i64> = Vec::with_capacity(a.len());
    for (k, &x) in a.iter().enumerate() {
        if k == 0 {
            g = x.abs();
            coeffs.push(if x < 0 {
                -1
            } else if x > 0 {
                1
            } else {
                0
            });
            continue;
        }
        let (d, s, t) = ext_gcd(g, x);
        for c in coeffs.iter_mut() {
            *c *= s;
        }
        coeffs.push(t);
        g = d;
    }
    (g, coeffs)
}

/// Returns (g, s, t) with s·a + t·b = g ≥ 0.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        let r = r0 - q * r1;
        r0 = r1;
        r1 = r;
        let s = s0 - q * s1;
        s0 = s1;
        s1 = s;
        let t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

pub fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn to_i64(n: &BigInt) -> Option<i64> {
    n.to_i64()
}
