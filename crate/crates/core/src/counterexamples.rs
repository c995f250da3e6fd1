//! Curves whose field of moduli is k but which need not descend hyperelliptically.
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::norm::same_norm_class;
use crate::arith::{is_norm, Elem, Rational, Tower};
use crate::binforms::{NormalForm, Shape};
use crate::descent::{cocycle, torus_ratio, CocycleKind};
use crate::error::{Error, Result};
use crate::invariants::{dihedral_invariants, wp_equal};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyShape {
    Plain,
    Xz,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleParams {
    pub d1: BigInt,
    pub d2: Rational,
    /// Norm one in k(√d1).
    pub u: Elem,
    pub n: u32,
    pub ell: usize,
    /// a_m, …, a_ℓ.
    pub upper: Vec<Elem>,
    pub shape: FamilyShape,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub galois_stable: bool,
    pub cocycle_r: Option<Rational>,
    pub r_matches_d2: bool,
    pub d2_is_norm: bool,
    pub squarefree: bool,
    pub exact_cn: bool,
}

impl Certificate {
    /// A certified counterexample: everything holds and d2 is not a norm.
    pub fn is_counterexample(&self) -> bool {
        self.galois_stable && self.r_matches_d2 && self.squarefree && self.exact_cn && !self.d2_is_norm
    }
}

/// a_ℓ = τ + u^σ τ^σ, so that a_ℓ^σ = u a_ℓ.
pub fn middle_from_tau(tau: &Elem, u: &Elem) -> Result<Elem> {
    Ok(tau + &(u.conj()? * tau.conj()?))
}

pub fn build_family(p: &CounterexampleParams) -> Result<(NormalForm, Certificate)> {
    let t = Tower::from_discs(core::slice::from_ref(&p.d1))?;
    if p.n < 2 || p.ell < 1 || p.upper.len() != p.ell + 1 {
        return Err(Error::Inconsistent(String::from("need n ≥ 2, ℓ ≥ 1 and ℓ + 1 upper coefficients")));
    }
    let u = p.u.lift(&t);
    if !u.field_norm()?.is_one() {
        return Err(Error::NotNormOne);
    }
    let upper: Vec<Elem> = p.upper.iter().map(|x| x.lift(&t)).collect();
    let ell = p.ell;
    let m = 2 * ell;
    let mut a = alloc::vec![Elem::zero(&t); m + 1];
    for (k, c) in upper.iter().enumerate() {
        a[m - k] = c.clone();
    }
    if a[ell].conj()? != &u * &a[ell] {
        return Err(Error::Inconsistent(String::from("a_ℓ^σ ≠ u·a_ℓ")));
    }
    let d2 = Elem::from_rational(&t, p.d2.clone());
    for j in 1..=ell {
        a[ell - j] = &u * &d2.pow(j as i64) * a[ell + j].conj()?;
    }
    let shape = match p.shape {
        FamilyShape::Plain => Shape::CcForm,
        FamilyShape::Xz => Shape::CForm2,
    };
    let nf = NormalForm::new(shape, p.n, a);
    let squarefree = nf.to_form().is_squarefree();
    if !squarefree || nf.a[0].is_zero() || nf.a[m].is_zero() {
        return Err(Error::Inconsistent(String::from("degenerate parameters")));
    }
    let inv = dihedral_invariants(&nf)?;
    let galois_stable = wp_equal(&inv, &inv.conj()?)?;
    let co = cocycle(&nf).ok();
    let cocycle_r = co.as_ref().filter(|c| c.kind == CocycleKind::Antidiagonal).and_then(|c| c.r.clone());
    let r_matches_d2 = cocycle_r.as_ref().is_some_and(|r| same_norm_class(r, &p.d2, &p.d1));
    let cert = Certificate {
        galois_stable,
        cocycle_r,
        r_matches_d2,
        d2_is_norm: is_norm(&p.d2, &p.d1),
        squarefree,
        exact_cn: check_exact_cn(&nf),
    };
    Ok((nf, cert))
}

/// The reduced automorphism group within the normalizer of the torus is exactly C_n.
pub fn check_exact_cn(nf: &NormalForm) -> bool {
    let supp: Vec<usize> = (0..=nf.m).filter(|&i| !nf.a[i].is_zero()).collect();
    let g = supp.iter().fold(0u32, |g, &i| crate::arith::integer::gcd_u32(g, (i - supp[0]) as u32));
    if g != 1 {
        return false;
    }
    if nf.shape == Shape::CForm1 {
        return true;
    }
    torus_ratio(&nf.reflected().a, &nf.a).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn e(t: &Tower, a: i64, b: i64) -> Elem {
        Elem::from_parts(t, &Elem::from_int(&Tower::rationals(), a), &Elem::from_int(&Tower::rationals(), b))
    }

    fn octavic_params(d1: i64, d2: Rational) -> CounterexampleParams {
        let t = Tower::quadratic(d1).unwrap();
        CounterexampleParams {
            d1: BigInt::from(d1),
            d2,
            u: Elem::from_int(&t, -1),
            n: 2,
            ell: 2,
            upper: alloc::vec![e(&t, 7, 1), e(&t, 3, -2), e(&t, 0, 12)],
            shape: FamilyShape::Plain,
        }
    }

    #[test]
    fn example_octavic() {
        let (nf, cert) = build_family(&octavic_params(2, q(3, 1))).unwrap();
        let t = nf.tower().clone();
        assert_eq!(nf.a[1], &e(&t, 3, 2) * &q(-3, 1));
        assert_eq!(nf.a[0], &e(&t, 7, -1) * &q(-9, 1));
        assert!(cert.is_counterexample(), "{cert:?}");
        assert_eq!(cert.cocycle_r, Some(q(3, 1)));
    }

    #[test]
    fn exact_cn_checks() {
        let t = Tower::rationals();
        let ones = |k: usize| (0..k).map(|_| Elem::one(&t)).collect::<Vec<_>>();
        assert!(!check_exact_cn(&NormalForm::new(Shape::CcForm, 8, ones(2))));
        assert!(!check_exact_cn(&NormalForm::new(Shape::CcForm, 4, ones(4))));
        let a = [1, 1, 0, 1].iter().map(|&v| Elem::from_int(&t, v)).collect();
        assert!(check_exact_cn(&NormalForm::new(Shape::CcForm, 4, a)));
    }

    #[test]
    fn rejects_bad_middle() {
        let mut p = octavic_params(2, q(3, 1));
        let t = Tower::quadratic(2).unwrap();
        p.upper[2] = Elem::one(&t);
        assert!(build_family(&p).is_err());
        p.upper[2] = middle_from_tau(&e(&t, 0, 6), &p.u).unwrap();
        assert_eq!(p.upper[2], e(&t, 0, 12));
    }
}
