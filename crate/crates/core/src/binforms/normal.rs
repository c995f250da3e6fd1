use alloc::vec::Vec;
use core::fmt;

use super::form::BinaryForm;
use crate::arith::integer::gcd_u32;
use crate::arith::{Elem, Tower};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    /// Σ a_i x^{in} z^{(m−i)n}
    CcForm,
    /// z · Σ a_i x^{in} z^{(m−i)n}
    CForm1,
    /// x z · Σ a_i x^{in} z^{(m−i)n}
    CForm2,
}

impl Shape {
    pub fn name(&self) -> &'static str {
        match self {
            Shape::CcForm => "ccform",
            Shape::CForm1 => "cform1",
            Shape::CForm2 => "cform2",
        }
    }

    pub fn parse(s: &str) -> Option<Shape> {
        match s {
            "ccform" => Some(Shape::CcForm),
            "cform1" => Some(Shape::CForm1),
            "cform2" => Some(Shape::CForm2),
            _ => None,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub shape: Shape,
    pub n: u32,
    pub m: usize,
    /// a_0..a_m, a_i the coefficient of x^{in} z^{(m−i)n} in the core.
    pub a: Vec<Elem>,
}

impl NormalForm {
    pub fn new(shape: Shape, n: u32, a: Vec<Elem>) -> NormalForm {
        assert!(a.len() >= 2, "core needs a_0 and a_m");
        let core = BinaryForm::new(a);
        let a = core.coeffs().to_vec();
        NormalForm { shape, n, m: a.len() - 1, a }
    }

    pub fn ell(&self) -> usize {
        if self.m.is_multiple_of(2) {
            self.m / 2
        } else {
            self.m.div_ceil(2)
        }
    }

    pub fn tower(&self) -> &Tower {
        self.a[0].tower()
    }

    pub fn degree(&self) -> usize {
        let core = self.m * self.n as usize;
        match self.shape {
            Shape::CcForm => core,
            Shape::CForm1 => core + 1,
            Shape::CForm2 => core + 2,
        }
    }

    pub fn genus(&self) -> usize {
        (self.degree() - 1) / 2
    }

    /// Σ a_i x^i z^{m−i}.
    pub fn core(&self) -> BinaryForm {
        BinaryForm::new(self.a.clone())
    }

    pub fn to_form(&self) -> BinaryForm {
        let t = self.tower().clone();
        let n = self.n as usize;
        let (off, extra) = match self.shape {
            Shape::CcForm => (0, 0),
            Shape::CForm1 => (0, 1),
            Shape::CForm2 => (1, 2),
        };
        let mut f = BinaryForm::zero(&t, self.m * n + extra);
        let mut c = f.coeffs().to_vec();
        for (i, a) in self.a.iter().enumerate() {
            c[off + i * n] = a.clone();
        }
        f = BinaryForm::new(c);
        f
    }

    pub fn with_coeffs(&self, a: Vec<Elem>) -> NormalForm {
        NormalForm::new(self.shape, self.n, a)
    }

    pub fn lift(&self, t: &Tower) -> NormalForm {
        self.with_coeffs(self.a.iter().map(|x| x.lift(t)).collect())
    }

    pub fn lower(&self) -> NormalForm {
        let c = self.core().lower();
        self.with_coeffs(c.coeffs().to_vec())
    }

    pub fn conj(&self) -> Result<NormalForm> {
        let a: Result<Vec<Elem>> = self.a.iter().map(|x| x.conj()).collect();
        Ok(self.with_coeffs(a?))
    }

    /// a_i ↦ a_{m−i}.
    pub fn reflected(&self) -> NormalForm {
        let mut a = self.a.clone();
        a.reverse();
        self.with_coeffs(a)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} m={}: {}", self.shape, self.n, self.m, self.to_form())
    }
}

fn gcd_all(v: impl Iterator<Item = usize>) -> u32 {
    v.fold(0u32, |g, x| gcd_u32(g, x as u32))
}

/// Normal form with the largest n ≥ 2, or `None` when only n = 1 fits.
/// Forms divisible by x but not by z are not normal; swap them first.
pub fn classify_normal_form(f: &BinaryForm) -> Result<Option<NormalForm>> {
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let big_n = f.degree();
    if big_n < 4 {
        return Ok(None);
    }
    let supp = f.support();
    let c0 = !f.coeff(0).is_zero();
    let cn = !f.coeff(big_n).is_zero();
    let (shape, off, extra) = match (c0, cn) {
        (true, true) => (Shape::CcForm, 0usize, 0usize),
        (true, false) => (Shape::CForm1, 0, 1),
        (false, false) => (Shape::CForm2, 1, 2),
        (false, true) => return Ok(None),
    };
    let n = gcd_all(supp.iter().map(|&i| i - off));
    if n < 2 {
        return Ok(None);
    }
    let m = (big_n - extra) / n as usize;
    if m * n as usize + extra != big_n {
        return Ok(None);
    }
    let a: Vec<Elem> = (0..=m).map(|i| f.coeff(off + i * n as usize).clone()).collect();
    Ok(Some(NormalForm::new(shape, n, a)))
}
