use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{is_square, square_class, Elem, Rational, Tower};
use crate::binforms::{BinaryForm, Mat2};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverData {
    pub n: u32,
    /// (x : z) ↦ (p : q)
    pub p: BinaryForm,
    pub q: BinaryForm,
    /// Sheet swap for n = 2.
    pub deck: Option<Mat2>,
    pub branch: BinaryForm,
    /// Zeros are the two ramification points.
    pub ramification: BinaryForm,
    /// The target change applied after the standard cover.
    pub affine: Mat2,
    /// δ for a conjugate pair u ± v√δ.
    pub delta: Option<BigInt>,
}

fn binom(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// p + q√δ = (x + √δ z)ⁿ, as forms over ℚ.
pub fn expand_power(delta: &BigInt, n: u32) -> (BinaryForm, BinaryForm) {
    let t = Tower::rationals();
    let mut p = vec![Rational::zero(); n as usize + 1];
    let mut q = vec![Rational::zero(); n as usize + 1];
    for k in 0..=n {
        // x^{n−k} z^k has index n − k
        let c = binom(n, k) * num_traits::pow(delta.clone(), (k / 2) as usize);
        let c = Rational::from_integer(c);
        if k % 2 == 0 {
            p[(n - k) as usize] = c;
        } else {
            q[(n - k) as usize] = c;
        }
    }
    (BinaryForm::from_rationals(&t, p), BinaryForm::from_rationals(&t, q))
}

/// (x − t z)(x − t^σ z) over the base of t's tower.
pub fn pair_form(t: &Elem) -> Result<BinaryForm> {
    let tc = t.conj()?;
    let tower = t.tower().clone();
    let f = BinaryForm::new(vec![t * &tc, -(t + &tc), Elem::one(&tower)]);
    f.lower_to(&tower.base()).map(|f| f.lower()).ok_or(Error::Internal(String::from("pair is not Galois-stable")))
}

/// Degree-n cyclic self-cover of the line branched exactly over the zeros of `branch`.
pub fn cyclic_cover(branch: &BinaryForm, n: u32) -> Result<CoverData> {
    if n == 0 || branch.degree() != 2 {
        return Err(Error::Inconsistent(String::from("cover needs n ≥ 1 and a degree-2 branch form")));
    }
    let branch = branch.lower();
    if branch.tower().level() != 0 {
        return Err(Error::Inconsistent(String::from("branch pair is not Galois-stable")));
    }
    let t = Tower::rationals();
    let c: Vec<Rational> = branch.coeffs().iter().map(|e| e.as_rational().unwrap()).collect();
    let (c0, c1, c2) = (&c[0], &c[1], &c[2]);
    let disc = c1 * c1 - Rational::from_integer(4.into()) * c2 * c0;
    if disc.is_zero() {
        return Err(Error::Inconsistent(String::from("branch form is a square")));
    }
    let q = |x: Rational| Elem::from_rational(&t, x);
    let rational_points = if c2.is_zero() {
        Some(((q(Rational::one()), q(Rational::zero())), (-q(c0.clone()), q(c1.clone()))))
    } else {
        is_square(&disc).map(|s| {
            let two_a = Rational::from_integer(2.into()) * c2;
            let t1 = (-c1 + &s) / &two_a;
            let t2 = (-c1 - &s) / two_a;
            ((q(t2), q(Rational::one())), (q(t1), q(Rational::one())))
        })
    };
    if let Some(((a2, b2), (a1, b1))) = rational_points {
        let affine = Mat2::new(a2, a1, b2, b1);
        let xn = BinaryForm::monomial(&t, n as usize, 0);
        let zn = BinaryForm::monomial(&t, 0, n as usize);
        let p = xn.scale(&affine.a).add(&zn.scale(&affine.b));
        let qf = xn.scale(&affine.c).add(&zn.scale(&affine.d));
        let deck = (n == 2).then(|| Mat2::from_ints(&t, [-1, 0, 0, 1]));
        let ramification = BinaryForm::monomial(&t, 1, 1);
        return Ok(CoverData { n, p, q: qf, deck, branch, ramification, affine, delta: None });
    }
    let delta = square_class(&disc);
    let two_a = Rational::from_integer(2.into()) * c2;
    let u = -c1 / &two_a;
    let v = is_square(&(&disc / Rational::from_integer(delta.clone())))
        .ok_or(Error::Internal(String::from("square class")))?
        / two_a;
    let (p0, q0) = expand_power(&delta, n);
    let p = p0.scale(&q(v.clone())).add(&q0.scale(&q(u.clone())));
    let affine = Mat2::new(q(v), q(u), q(Rational::zero()), q(Rational::one()));
    let deck = (n == 2).then(|| {
        Mat2::new(
            q(Rational::zero()),
            q(Rational::from_integer(delta.clone())),
            q(Rational::one()),
            q(Rational::zero()),
        )
    });
    let ramification =
        BinaryForm::from_rationals(&t, vec![Rational::from_integer(-delta.clone()), Rational::zero(), Rational::one()]);
    Ok(CoverData { n, p, q: q0, deck, branch, ramification, affine, delta: Some(delta) })
}
