use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{Elem, Tower};
use crate::binforms::BinaryForm;

/// Exponents (a, b, c) of X^a Y^b Z^c.
pub type Exps = (u32, u32, u32);

/// A homogeneous ternary form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryForm {
    tower: Tower,
    degree: u32,
    terms: BTreeMap<Exps, Elem>,
}

impl TernaryForm {
    pub fn zero(tower: &Tower, degree: u32) -> TernaryForm {
        TernaryForm { tower: tower.clone(), degree, terms: BTreeMap::new() }
    }

    pub fn monomial(c: Elem, e: Exps) -> TernaryForm {
        let mut f = TernaryForm::zero(c.tower(), e.0 + e.1 + e.2);
        f.push(e, c);
        f
    }

    pub fn from_terms(tower: &Tower, degree: u32, terms: impl IntoIterator<Item = (Exps, Elem)>) -> TernaryForm {
        let mut f = TernaryForm::zero(tower, degree);
        for (e, c) in terms {
            assert_eq!(e.0 + e.1 + e.2, degree, "inhomogeneous term");
            f.push(e, c);
        }
        f
    }

    fn push(&mut self, e: Exps, c: Elem) {
        let t = self.tower.join(c.tower()).expect("incompatible towers");
        if t != self.tower {
            self.lift_in_place(&t);
        }
        let c = c.lift(&t);
        let s = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(e, s);
        }
    }

    fn lift_in_place(&mut self, t: &Tower) {
        self.tower = t.clone();
        for v in self.terms.values_mut() {
            *v = v.lift(t);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exps) -> Elem {
        self.terms.get(&e).cloned().unwrap_or_else(|| Elem::zero(&self.tower))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TernaryForm) -> TernaryForm {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut f = self.clone();
        for (e, c) in &other.terms {
            f.push(*e, c.clone());
        }
        f
    }

    pub fn scale(&self, s: &Elem) -> TernaryForm {
        let mut f = TernaryForm::zero(&self.tower, self.degree);
        for (e, c) in &self.terms {
            f.push(*e, c * s);
        }
        f
    }

    pub fn mul(&self, other: &TernaryForm) -> TernaryForm {
        let mut f = TernaryForm::zero(&self.tower, self.degree + other.degree);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                f.push((e1.0 + e2.0, e1.1 + e2.1, e1.2 + e2.2), c1 * c2);
            }
        }
        f
    }

    pub fn pow(&self, k: u32) -> TernaryForm {
        let mut acc = TernaryForm::monomial(Elem::one(&self.tower), (0, 0, 0));
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn conj(&self) -> crate::Result<TernaryForm> {
        let mut f = TernaryForm::zero(&self.tower, self.degree);
        for (e, c) in &self.terms {
            f.push(*e, c.conj()?);
        }
        Ok(f)
    }

    pub fn lower_to(&self, t: &Tower) -> Option<TernaryForm> {
        let mut f = TernaryForm::zero(t, self.degree);
        for (e, c) in &self.terms {
            f.terms.insert(*e, c.lower_to(t)?);
        }
        Some(f)
    }

    /// Normal form modulo X² + λY² + μZ²: X-degree at most one.
    pub fn reduce(&self, lambda: &Elem, mu: &Elem) -> TernaryForm {
        let mut f = TernaryForm::zero(&self.tower, self.degree);
        let mut todo: Vec<(Exps, Elem)> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        while let Some((e, c)) = todo.pop() {
            if e.0 < 2 {
                f.push(e, c);
                continue;
            }
            todo.push(((e.0 - 2, e.1 + 2, e.2), -(&c * lambda)));
            todo.push(((e.0 - 2, e.1, e.2 + 2), -(&c * mu)));
        }
        f
    }

    /// F(P₀, P₁, P₂) for binary forms of a common degree.
    pub fn pullback(&self, p: &[BinaryForm; 3]) -> BinaryForm {
        let k = p[0].degree();
        let t = p.iter().fold(self.tower.clone(), |t, f| t.join(f.tower()).expect("towers"));
        let powers = |f: &BinaryForm| {
            let mut v = vec![BinaryForm::monomial(&t, 0, 0)];
            for i in 1..=self.degree as usize {
                let next = v[i - 1].mul(f);
                v.push(next);
            }
            v
        };
        let pw: Vec<Vec<BinaryForm>> = p.iter().map(powers).collect();
        let mut acc = BinaryForm::zero(&t, self.degree as usize * k);
        for (e, c) in &self.terms {
            let m = pw[0][e.0 as usize].mul(&pw[1][e.1 as usize]).mul(&pw[2][e.2 as usize]);
            acc = acc.add(&m.scale(c));
        }
        acc
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b, c), v)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({v})*X^{a}*Y^{b}*Z^{c}")?;
        }
        Ok(())
    }
}

/// All (a, b, c) of total degree D with a ≤ 1, a basis of degree-D forms modulo a conic.
pub fn reduced_monomials(degree: u32) -> Vec<Exps> {
    let mut v = Vec::new();
    for a in 0..=1.min(degree) {
        for b in (0..=degree - a).rev() {
            v.push((a, b, degree - a - b));
        }
    }
    v
}
