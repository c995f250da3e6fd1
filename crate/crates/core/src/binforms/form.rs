use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::mat::Mat2;
use super::poly;
use crate::arith::{Elem, Rational, Tower};
use crate::error::{Error, Result};

/// f = Σ c_i x^i z^{N−i}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    tower: Tower,
    coeffs: Vec<Elem>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Elem>) -> BinaryForm {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        let t = coeffs
            .iter()
            .skip(1)
            .fold(coeffs[0].tower().clone(), |t, c| t.join(c.tower()).expect("coefficients in incompatible towers"));
        let coeffs = coeffs.iter().map(|c| c.lift(&t)).collect();
        BinaryForm { tower: t, coeffs }
    }

    pub fn from_rationals(t: &Tower, c: Vec<Rational>) -> BinaryForm {
        BinaryForm::new(c.into_iter().map(|q| Elem::from_rational(t, q)).collect())
    }

    pub fn from_ints(t: &Tower, c: &[i64]) -> BinaryForm {
        BinaryForm::new(c.iter().map(|&q| Elem::from_int(t, q)).collect())
    }

    pub fn zero(t: &Tower, degree: usize) -> BinaryForm {
        BinaryForm { tower: t.clone(), coeffs: vec![Elem::zero(t); degree + 1] }
    }

    /// x^i z^j.
    pub fn monomial(t: &Tower, i: usize, j: usize) -> BinaryForm {
        let mut f = BinaryForm::zero(t, i + j);
        f.coeffs[i] = Elem::one(t);
        f
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Elem {
        &self.coeffs[i]
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Elem::is_zero)
    }

    pub fn lift(&self, t: &Tower) -> BinaryForm {
        BinaryForm { tower: t.clone(), coeffs: self.coeffs.iter().map(|c| c.lift(t)).collect() }
    }

    pub fn lower_to(&self, t: &Tower) -> Option<BinaryForm> {
        let coeffs: Option<Vec<Elem>> = self.coeffs.iter().map(|c| c.lower_to(t)).collect();
        Some(BinaryForm { tower: t.clone(), coeffs: coeffs? })
    }

    /// Drops top tower levels that no coefficient uses.
    pub fn lower(&self) -> BinaryForm {
        let mut f = self.clone();
        while f.tower.level() > 0 {
            match f.lower_to(&f.tower.base()) {
                Some(g) => f = g,
                None => break,
            }
        }
        f
    }

    pub fn conj(&self) -> Result<BinaryForm> {
        let coeffs: Result<Vec<Elem>> = self.coeffs.iter().map(|c| c.conj()).collect();
        Ok(BinaryForm { tower: self.tower.clone(), coeffs: coeffs? })
    }

    pub fn scale(&self, s: &Elem) -> BinaryForm {
        BinaryForm::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Coefficient reversal, i.e. act(swap, f).
    pub fn reversed(&self) -> BinaryForm {
        let mut c = self.coeffs.clone();
        c.reverse();
        BinaryForm { tower: self.tower.clone(), coeffs: c }
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let t = self.tower.join(&other.tower).expect("incompatible towers");
        BinaryForm { tower: t.clone(), coeffs: poly::mul(&self.lift(&t).coeffs, &other.lift(&t).coeffs, &t) }
    }

    pub fn add(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), other.degree());
        BinaryForm::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, e: usize) -> BinaryForm {
        let mut acc = BinaryForm::monomial(&self.tower, 0, 0);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at a point (x, z).
    pub fn eval(&self, x: &Elem, z: &Elem) -> Elem {
        let n = self.degree();
        let mut acc = Elem::zero(&self.tower);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + c * &(x.pow(i as i64) * z.pow((n - i) as i64));
            }
        }
        acc
    }

    /// f(p, q) for forms p, q of a common degree, by Horner's rule in p.
    pub fn compose(&self, p: &BinaryForm, q: &BinaryForm) -> BinaryForm {
        assert_eq!(p.degree(), q.degree(), "substitution forms need equal degrees");
        let n = self.degree();
        let t = self.tower.join(&p.tower).and_then(|t| t.join(&q.tower)).expect("incompatible towers");
        let (p, q) = (p.lift(&t), q.lift(&t));
        let mut acc = BinaryForm::monomial(&t, 0, 0).scale(&self.coeffs[n].lift(&t));
        let mut qpow = BinaryForm::monomial(&t, 0, 0);
        for i in (0..n).rev() {
            qpow = qpow.mul(&q);
            acc = acc.mul(&p);
            let c = &self.coeffs[i];
            if !c.is_zero() {
                acc = acc.add(&qpow.scale(&c.lift(&t)));
            }
        }
        acc
    }

    /// Coefficients with all lower-level structure visible: the support.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    /// Whether f has no repeated root on the projective line.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let p = poly::trim(self.coeffs.clone());
        let at_infinity = self.coeffs.len() - p.len();
        if at_infinity > 1 {
            return false;
        }
        if crate::arith::modp::certifies_squarefree(&p) {
            return true;
        }
        let g = poly::gcd(&p, &poly::derivative(&p));
        g.len() <= 1
    }
}

/// f(a x + b z, c x + d z), so act(A, act(B, f)) = act(B·A, f).
pub fn act(a: &Mat2, f: &BinaryForm) -> Result<BinaryForm> {
    if a.det().is_zero() {
        return Err(Error::Singular);
    }
    let t = a.tower().join(f.tower()).expect("incompatible towers");
    let a = a.lift(&t);
    let f = f.lift(&t);
    let n = f.degree();
    if a.is_diagonal() || a.is_antidiagonal() {
        let (u, v) = if a.is_diagonal() { (&a.a, &a.d) } else { (&a.b, &a.c) };
        let mut c: Vec<Elem> =
            f.coeffs.iter().enumerate().map(|(i, c)| c * &u.pow(i as i64) * v.pow((n - i) as i64)).collect();
        if !a.is_diagonal() {
            c.reverse();
        }
        return Ok(BinaryForm { tower: t, coeffs: c });
    }
    let p = BinaryForm::new(vec![a.b.clone(), a.a.clone()]);
    let q = BinaryForm::new(vec![a.d.clone(), a.c.clone()]);
    Ok(f.compose(&p, &q))
}

/// c with f = c·g.
pub fn proportional(f: &BinaryForm, g: &BinaryForm) -> Option<Elem> {
    if f.degree() != g.degree() {
        return None;
    }
    let i = g.coeffs.iter().position(|c| !c.is_zero())?;
    let c = &f.coeffs[i] / &g.coeffs[i];
    for (x, y) in f.coeffs.iter().zip(&g.coeffs) {
        if *x != &c * y {
            return None;
        }
    }
    if c.is_zero() {
        return None;
    }
    Some(c)
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for i in (0..=n).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            match i {
                0 => {}
                1 => write!(f, "*x")?,
                _ => write!(f, "*x^{i}")?,
            }
            match n - i {
                0 => {}
                1 => write!(f, "*z")?,
                j => write!(f, "*z^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
