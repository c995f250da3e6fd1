use super::form::{act, proportional, BinaryForm};
use super::mat::Mat2;
use crate::arith::{Elem, Rational, Tower};
use crate::error::{Error, Result};

/// √x, adjoining a rational square class to the tower when needed.
pub fn sqrt_extending(x: &Elem) -> Result<Elem> {
    if let Some(r) = x.sqrt() {
        return Ok(r);
    }
    let d = x
        .square_class_rational()
        .ok_or_else(|| Error::Unsupported(alloc::format!("square root of {x} needs a non-rational discriminant")))?;
    let t = x.tower().extend(&d)?;
    x.lift(&t).sqrt().ok_or_else(|| Error::Internal(alloc::format!("no square root of {x} in {t}")))
}

fn is_automorphism(f: &BinaryForm, m: &Mat2) -> Result<bool> {
    Ok(proportional(&act(m, f)?, f).is_some())
}

/// Columns are eigenvectors for e and −e of the traceless (a, b; c, −a).
fn eigenbasis(m0: &Mat2, e: &Elem) -> Mat2 {
    let t = e.tower().join(m0.tower()).expect("towers");
    let m0 = m0.lift(&t);
    let a = &m0.a;
    if !m0.b.is_zero() {
        Mat2::new(m0.b.clone(), m0.b.clone(), e - a, -e - a)
    } else if m0.c.is_zero() {
        Mat2::identity(&t)
    } else {
        Mat2::new(e + a, a - e, m0.c.clone(), m0.c.clone())
    }
}

fn diagonalize_traceless(f: &BinaryForm, m0: &Mat2) -> Result<(Mat2, BinaryForm)> {
    let e2 = -m0.det();
    let e = sqrt_extending(&e2)?;
    let a = eigenbasis(m0, &e);
    let g = act(&a, f)?;
    Ok((a, g))
}

/// A with A⁻¹ M A diagonal, g = act(A, f). M must be an involution of f up to scalar.
pub fn diagonalize_involution(f: &BinaryForm, m: &Mat2) -> Result<(Mat2, BinaryForm)> {
    if m.det().is_zero() {
        return Err(Error::Singular);
    }
    if !is_automorphism(f, m)? {
        return Err(Error::NotAutomorphism);
    }
    if m.is_scalar() {
        return Ok((Mat2::identity(m.tower()), f.clone()));
    }
    if !m.trace().is_zero() {
        return Err(Error::Inconsistent(alloc::string::String::from("M² is not scalar")));
    }
    diagonalize_traceless(f, m)
}

/// As `diagonalize_involution` for any non-scalar automorphism, via its trace-free part.
pub fn diagonalize_automorphism(f: &BinaryForm, m: &Mat2) -> Result<(Mat2, BinaryForm)> {
    if m.det().is_zero() {
        return Err(Error::Singular);
    }
    if !is_automorphism(f, m)? {
        return Err(Error::NotAutomorphism);
    }
    if m.is_scalar() {
        return Err(Error::Inconsistent(alloc::string::String::from("scalar automorphism")));
    }
    let half = Elem::from_rational(m.tower(), Rational::new(1.into(), 2.into()));
    let s = &m.trace() * &half;
    let m0 = Mat2::new(&m.a - &s, m.b.clone(), m.c.clone(), &m.d - &s);
    let (a, g) = diagonalize_traceless(f, &m0)?;
    Ok((lower_mat(&a), g.lower()))
}

fn lower_mat(a: &Mat2) -> Mat2 {
    let mut a = a.clone();
    while a.tower().level() > 0 {
        let base: Tower = a.tower().base();
        match a.lower_to(&base) {
            Some(b) => a = b,
            None => break,
        }
    }
    a
}
