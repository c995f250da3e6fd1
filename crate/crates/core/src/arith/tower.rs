use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::integer::{rational_sqrt, square_class, squarefree_core_int};
use super::Rational;
use crate::error::{Error, Result};

/// Q, Q(√d1) or Q(√d1)(√d2). Discriminants are squarefree rational integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Tower {
    discs: Vec<BigInt>,
}

impl Tower {
    pub fn rationals() -> Tower {
        Tower { discs: Vec::new() }
    }

    /// Q(√d), d reduced to its squarefree core.
    pub fn quadratic(d: i64) -> Result<Tower> {
        Tower::rationals().extend(&BigInt::from(d))
    }

    pub fn from_discs(discs: &[BigInt]) -> Result<Tower> {
        let mut t = Tower::rationals();
        for d in discs {
            t = t.extend(d)?;
        }
        Ok(t)
    }

    /// Adjoin √d for a rational integer d that is not a square at this level.
    pub fn extend(&self, d: &BigInt) -> Result<Tower> {
        if self.discs.len() >= 2 {
            return Err(Error::InvalidDisc(String::from("at most two quadratic steps")));
        }
        if d.is_zero() {
            return Err(Error::InvalidDisc(String::from("zero")));
        }
        let core = squarefree_core_int(d);
        if core.is_one() || self.discs.contains(&core) {
            return Err(Error::InvalidDisc(format!("{d} is a square at this level")));
        }
        if self.discs.len() == 1 {
            let prod = squarefree_core_int(&(&core * &self.discs[0]));
            if prod.is_one() {
                return Err(Error::InvalidDisc(format!("{d} is a square at this level")));
            }
        }
        let mut discs = self.discs.clone();
        discs.push(core);
        Ok(Tower { discs })
    }

    pub fn level(&self) -> usize {
        self.discs.len()
    }

    pub fn discs(&self) -> &[BigInt] {
        &self.discs
    }

    pub fn top_disc(&self) -> Option<&BigInt> {
        self.discs.last()
    }

    pub fn base(&self) -> Tower {
        let mut discs = self.discs.clone();
        discs.pop();
        Tower { discs }
    }

    pub fn dim(&self) -> usize {
        1 << self.discs.len()
    }

    pub fn is_prefix_of(&self, other: &Tower) -> bool {
        other.discs.len() >= self.discs.len() && other.discs[..self.discs.len()] == self.discs[..]
    }

    /// The larger of two towers when one contains the other.
    pub fn join(&self, other: &Tower) -> Option<Tower> {
        if self.is_prefix_of(other) {
            Some(other.clone())
        } else if other.is_prefix_of(self) {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q")?;
        for d in &self.discs {
            write!(f, "(sqrt({d}))")?;
        }
        Ok(())
    }
}

/// Element lo + hi·√d_top; coords hold lo in the first half, hi in the second.
#[derive(Clone, Debug)]
pub struct Elem {
    tower: Tower,
    coords: Vec<Rational>,
}

fn scale(a: &[Rational], d: &BigInt) -> Vec<Rational> {
    let d = Rational::from_integer(d.clone());
    a.iter().map(|x| x * &d).collect()
}

fn add_v(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_v(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn mul_v(a: &[Rational], b: &[Rational], discs: &[BigInt]) -> Vec<Rational> {
    if discs.is_empty() {
        return vec![&a[0] * &b[0]];
    }
    let h = a.len() / 2;
    let base = &discs[..discs.len() - 1];
    let d = &discs[discs.len() - 1];
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    let lo = add_v(&mul_v(a0, b0, base), &scale(&mul_v(a1, b1, base), d));
    let hi = add_v(&mul_v(a0, b1, base), &mul_v(a1, b0, base));
    let mut out = lo;
    out.extend(hi);
    out
}

fn inv_v(a: &[Rational], discs: &[BigInt]) -> Vec<Rational> {
    if discs.is_empty() {
        return vec![a[0].recip()];
    }
    let h = a.len() / 2;
    let base = &discs[..discs.len() - 1];
    let d = &discs[discs.len() - 1];
    let (a0, a1) = a.split_at(h);
    let norm = sub_v(&mul_v(a0, a0, base), &scale(&mul_v(a1, a1, base), d));
    let ni = inv_v(&norm, base);
    let mut out = mul_v(a0, &ni, base);
    out.extend(mul_v(a1, &ni, base).into_iter().map(|x| -x));
    out
}

fn sqrt_v(a: &[Rational], discs: &[BigInt]) -> Option<Vec<Rational>> {
    if discs.is_empty() {
        return rational_sqrt(&a[0]).map(|r| vec![r]);
    }
    let h = a.len() / 2;
    let base = &discs[..discs.len() - 1];
    let d = &discs[discs.len() - 1];
    let (a0, a1) = a.split_at(h);
    let zero = vec![Rational::zero(); h];
    if a1.iter().all(Zero::is_zero) {
        if let Some(r) = sqrt_v(a0, base) {
            let mut out = r;
            out.extend(zero);
            return Some(out);
        }
        let dinv = Rational::new(BigInt::one(), d.clone());
        let q: Vec<Rational> = a0.iter().map(|x| x * &dinv).collect();
        return sqrt_v(&q, base).map(|c| {
            let mut out = zero.clone();
            out.extend(c);
            out
        });
    }
    let n = sub_v(&mul_v(a0, a0, base), &scale(&mul_v(a1, a1, base), d));
    let rn = sqrt_v(&n, base)?;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for sign in [1i32, -1] {
        let x0: Vec<Rational> =
            a0.iter().zip(&rn).map(|(x, r)| if sign > 0 { (x + r) * &half } else { (x - r) * &half }).collect();
        if x0.iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(y) = sqrt_v(&x0, base) {
            let two_y: Vec<Rational> = y.iter().map(|c| c * Rational::from_integer(BigInt::from(2))).collect();
            let z = mul_v(a1, &inv_v(&two_y, base), base);
            let mut out = y;
            out.extend(z);
            return Some(out);
        }
    }
    None
}

impl Elem {
    pub fn zero(tower: &Tower) -> Elem {
        Elem { tower: tower.clone(), coords: vec![Rational::zero(); tower.dim()] }
    }

    pub fn one(tower: &Tower) -> Elem {
        Elem::from_rational(tower, Rational::one())
    }

    pub fn from_rational(tower: &Tower, q: Rational) -> Elem {
        let mut e = Elem::zero(tower);
        e.coords[0] = q;
        e
    }

    pub fn from_int(tower: &Tower, n: i64) -> Elem {
        Elem::from_rational(tower, Rational::from_integer(BigInt::from(n)))
    }

    pub fn frac(tower: &Tower, n: i64, d: i64) -> Elem {
        Elem::from_rational(tower, Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// √d_top.
    pub fn generator(tower: &Tower) -> Elem {
        assert!(tower.level() >= 1, "no generator at level 0");
        let mut e = Elem::zero(tower);
        e.coords[tower.dim() / 2] = Rational::one();
        e
    }

    /// lo + hi·√d_top with lo, hi in the base level.
    pub fn from_parts(tower: &Tower, lo: &Elem, hi: &Elem) -> Elem {
        let base = tower.base();
        let lo = lo.lift(&base);
        let hi = hi.lift(&base);
        let mut coords = lo.coords;
        coords.extend(hi.coords);
        Elem { tower: tower.clone(), coords }
    }

    pub fn from_coords(tower: &Tower, coords: Vec<Rational>) -> Elem {
        assert_eq!(coords.len(), tower.dim(), "coordinate count does not match tower");
        Elem { tower: tower.clone(), coords }
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn level(&self) -> usize {
        self.tower.level()
    }

    /// (lo, hi) over the base level.
    pub fn parts(&self) -> (Elem, Elem) {
        assert!(self.level() >= 1, "no parts at level 0");
        let base = self.tower.base();
        let h = self.coords.len() / 2;
        (
            Elem { tower: base.clone(), coords: self.coords[..h].to_vec() },
            Elem { tower: base, coords: self.coords[h..].to_vec() },
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Embedding into a tower containing this one.
    pub fn lift(&self, tower: &Tower) -> Elem {
        assert!(self.tower.is_prefix_of(tower), "cannot lift {} into {}", self.tower, tower);
        let mut coords = self.coords.clone();
        coords.resize(tower.dim(), Rational::zero());
        Elem { tower: tower.clone(), coords }
    }

    /// Tries to view the element in a subtower (a prefix of the current one).
    pub fn lower_to(&self, tower: &Tower) -> Option<Elem> {
        assert!(tower.is_prefix_of(&self.tower));
        let k = tower.dim();
        if self.coords[k..].iter().all(Zero::is_zero) {
            Some(Elem { tower: tower.clone(), coords: self.coords[..k].to_vec() })
        } else {
            None
        }
    }

    /// Conjugation σ at the top level.
    pub fn conj(&self) -> Result<Elem> {
        if self.level() == 0 {
            return Err(Error::NoConjugation);
        }
        let h = self.coords.len() / 2;
        let coords = self.coords.iter().enumerate().map(|(i, c)| if i >= h { -c } else { c.clone() }).collect();
        Ok(Elem { tower: self.tower.clone(), coords })
    }

    /// x·σ(x), an element of the base level.
    pub fn field_norm(&self) -> Result<Elem> {
        if self.level() == 0 {
            return Err(Error::NoConjugation);
        }
        let p = self * &self.conj()?;
        Ok(p.lower_to(&self.tower.base()).expect("norm lies in the base"))
    }

    pub fn inv(&self) -> Elem {
        assert!(!self.is_zero(), "inverse of zero");
        Elem { tower: self.tower.clone(), coords: inv_v(&self.coords, &self.tower.discs) }
    }

    pub fn pow(&self, e: i64) -> Elem {
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Elem::one(&self.tower);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// A square root in the same tower, when one exists.
    pub fn sqrt(&self) -> Option<Elem> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let r = sqrt_v(&self.coords, &self.tower.discs)?;
        let e = Elem { tower: self.tower.clone(), coords: r };
        debug_assert!(&(&e * &e) == self);
        Some(e)
    }

    /// A rational integer d (squarefree) with self/d a square in this tower.
    /// `None` when no rational d works.
    pub fn square_class_rational(&self) -> Option<BigInt> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            let c = square_class(&q);
            let mut ds: Vec<BigInt> = self.tower.discs.clone();
            if ds.len() == 2 {
                ds.push(&ds[0] * &ds[1]);
            }
            if ds.iter().any(|d| squarefree_core_int(&(&c * d)).is_one()) {
                return Some(BigInt::one());
            }
            return Some(c);
        }
        if self.level() != 1 {
            return None;
        }
        // x = (x + n)^2 / (Tr x + 2n) when N(x) = n^2
        let norm = self.field_norm().ok()?.as_rational()?;
        let n = rational_sqrt(&norm)?;
        let tr = &self.coords[0] * Rational::from_integer(BigInt::from(2));
        for t in
            [&tr + &n * Rational::from_integer(BigInt::from(2)), &tr - &n * Rational::from_integer(BigInt::from(2))]
        {
            if t.is_zero() {
                continue;
            }
            let c = square_class(&t);
            let q = self / &Elem::from_rational(&self.tower, Rational::from_integer(c.clone()));
            if q.sqrt().is_some() {
                return Some(c);
            }
        }
        None
    }

    fn coerce(&self, other: &Elem) -> (Elem, Elem) {
        if self.tower == other.tower {
            return (self.clone(), other.clone());
        }
        let t = self
            .tower
            .join(&other.tower)
            .unwrap_or_else(|| panic!("incompatible towers {} and {}", self.tower, other.tower));
        (self.lift(&t), other.lift(&t))
    }

    pub fn is_negative_rational(&self) -> bool {
        self.as_rational().map(|q| q.is_negative()).unwrap_or(false)
    }
}

impl PartialEq for Elem {
    fn eq(&self, other: &Elem) -> bool {
        if self.tower == other.tower {
            return self.coords == other.coords;
        }
        match self.tower.join(&other.tower) {
            Some(t) => self.lift(&t).coords == other.lift(&t).coords,
            None => false,
        }
    }
}

impl Eq for Elem {}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level() == 0 {
            return write!(f, "{}", self.coords[0]);
        }
        let (lo, hi) = self.parts();
        let d = self.tower.top_disc().expect("level >= 1");
        if hi.is_zero() {
            return write!(f, "{lo}");
        }
        if lo.is_zero() {
            return write!(f, "({hi})*sqrt({d})");
        }
        write!(f, "({lo}) + ({hi})*sqrt({d})")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a Elem> for &'a Elem {
            type Output = Elem;
            fn $m(self, rhs: &'a Elem) -> Elem {
                let f: fn(&Elem, &Elem) -> Elem = $body;
                if self.tower == rhs.tower {
                    f(self, rhs)
                } else {
                    let (a, b) = self.coerce(rhs);
                    f(&a, &b)
                }
            }
        }
        impl $tr<Elem> for Elem {
            type Output = Elem;
            fn $m(self, rhs: Elem) -> Elem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Elem> for Elem {
            type Output = Elem;
            fn $m(self, rhs: &'a Elem) -> Elem {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Elem> for &'a Elem {
            type Output = Elem;
            fn $m(self, rhs: Elem) -> Elem {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| Elem { tower: a.tower.clone(), coords: add_v(&a.coords, &b.coords) });
binop!(Sub, sub, |a, b| Elem { tower: a.tower.clone(), coords: sub_v(&a.coords, &b.coords) });
binop!(Mul, mul, |a, b| Elem { tower: a.tower.clone(), coords: mul_v(&a.coords, &b.coords, &a.tower.discs) });
binop!(Div, div, |a, b| {
    assert!(!b.is_zero(), "division by zero");
    Elem { tower: a.tower.clone(), coords: mul_v(&a.coords, &inv_v(&b.coords, &a.tower.discs), &a.tower.discs) }
});

impl Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        Elem { tower: self.tower.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Neg for Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        -&self
    }
}

impl Mul<&Rational> for &Elem {
    type Output = Elem;
    fn mul(self, rhs: &Rational) -> Elem {
        Elem { tower: self.tower.clone(), coords: self.coords.iter().map(|c| c * rhs).collect() }
    }
}

impl Mul<&Rational> for Elem {
    type Output = Elem;
    fn mul(self, rhs: &Rational) -> Elem {
        &self * rhs
    }
}
