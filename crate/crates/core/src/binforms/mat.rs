use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::arith::{Elem, Rational, Tower};
use crate::error::{Error, Result};

/// (a, b; c, d), acting on forms by (x, z) ↦ (a x + b z, c x + d z).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
    pub d: Elem,
}

impl Mat2 {
    pub fn new(a: Elem, b: Elem, c: Elem, d: Elem) -> Mat2 {
        let t = [&b, &c, &d]
            .iter()
            .fold(a.tower().clone(), |t, e| t.join(e.tower()).expect("matrix entries in incompatible towers"));
        Mat2 { a: a.lift(&t), b: b.lift(&t), c: c.lift(&t), d: d.lift(&t) }
    }

    pub fn from_rationals(t: &Tower, e: [Rational; 4]) -> Mat2 {
        let [a, b, c, d] = e;
        Mat2::new(
            Elem::from_rational(t, a),
            Elem::from_rational(t, b),
            Elem::from_rational(t, c),
            Elem::from_rational(t, d),
        )
    }

    pub fn from_ints(t: &Tower, e: [i64; 4]) -> Mat2 {
        Mat2::new(Elem::from_int(t, e[0]), Elem::from_int(t, e[1]), Elem::from_int(t, e[2]), Elem::from_int(t, e[3]))
    }

    pub fn identity(t: &Tower) -> Mat2 {
        Mat2::from_ints(t, [1, 0, 0, 1])
    }

    /// (0, 1; 1, 0): reverses coefficients.
    pub fn swap(t: &Tower) -> Mat2 {
        Mat2::from_ints(t, [0, 1, 1, 0])
    }

    pub fn diag(x: &Elem, y: &Elem) -> Mat2 {
        let t = x.tower().join(y.tower()).expect("incompatible towers");
        Mat2::new(x.clone(), Elem::zero(&t), Elem::zero(&t), y.clone())
    }

    pub fn tower(&self) -> &Tower {
        self.a.tower()
    }

    pub fn det(&self) -> Elem {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> Elem {
        &self.a + &self.d
    }

    pub fn inv(&self) -> Result<Mat2> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let i = det.inv();
        Ok(Mat2::new(&self.d * &i, -(&self.b * &i), -(&self.c * &i), &self.a * &i))
    }

    /// The inverse up to scalar: the adjugate.
    pub fn adjugate(&self) -> Mat2 {
        Mat2::new(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn scale(&self, s: &Elem) -> Mat2 {
        Mat2::new(s * &self.a, s * &self.b, s * &self.c, s * &self.d)
    }

    pub fn lift(&self, t: &Tower) -> Mat2 {
        Mat2::new(self.a.lift(t), self.b.lift(t), self.c.lift(t), self.d.lift(t))
    }

    pub fn lower_to(&self, t: &Tower) -> Option<Mat2> {
        Some(Mat2 { a: self.a.lower_to(t)?, b: self.b.lower_to(t)?, c: self.c.lower_to(t)?, d: self.d.lower_to(t)? })
    }

    /// Entrywise top-level conjugation.
    pub fn conj(&self) -> Result<Mat2> {
        Ok(Mat2::new(self.a.conj()?, self.b.conj()?, self.c.conj()?, self.d.conj()?))
    }

    pub fn entries(&self) -> [&Elem; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    pub fn is_diagonal(&self) -> bool {
        self.b.is_zero() && self.c.is_zero()
    }

    pub fn is_antidiagonal(&self) -> bool {
        self.a.is_zero() && self.d.is_zero()
    }

    /// Equality in PGL₂.
    pub fn projectively_equal(&self, other: &Mat2) -> bool {
        let x: Vec<&Elem> = self.entries().to_vec();
        let y: Vec<&Elem> = other.entries().to_vec();
        for i in 0..4 {
            for j in 0..4 {
                if (x[i] * y[j]) != (x[j] * y[i]) {
                    return false;
                }
            }
        }
        x.iter().any(|e| !e.is_zero())
    }

    /// Image of the point (x : z) under the column action.
    pub fn apply_point(&self, p: (&Elem, &Elem)) -> (Elem, Elem) {
        (&self.a * p.0 + &self.b * p.1, &self.c * p.0 + &self.d * p.1)
    }
}

impl<'a> Mul<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn mul(self, o: &'a Mat2) -> Mat2 {
        Mat2::new(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        &self * &o
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}; {}, {}]", self.a, self.b, self.c, self.d)
    }
}
