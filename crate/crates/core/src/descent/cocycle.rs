use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::integer::ext_gcd_vec;
use crate::arith::{Elem, Rational};
use crate::binforms::{NormalForm, Shape};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleKind {
    /// a_i^σ = c·z^i·a_i
    Diagonal,
    /// a_i^σ = c·z^i·a_{m−i}
    Antidiagonal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleData {
    pub kind: CocycleKind,
    pub z: Elem,
    pub c: Elem,
    /// 1/z, in k; antidiagonal only.
    pub r: Option<Rational>,
    pub d: BigInt,
}

impl CocycleData {
    /// (λⁿ, μⁿ) of the torus element realizing the cocycle, up to a common scalar.
    pub fn witnesses(&self) -> (Elem, Elem) {
        (self.z.clone(), Elem::one(self.z.tower()))
    }
}

/// (c, z) with b_i = c·z^i·a_i for every i; `None` if no such pair exists.
/// Needs the support of a to have gap gcd 1, or a single element.
pub fn torus_ratio(a: &[Elem], b: &[Elem]) -> Option<(Elem, Elem)> {
    if a.len() != b.len() {
        return None;
    }
    if a.iter().zip(b).any(|(x, y)| x.is_zero() != y.is_zero()) {
        return None;
    }
    let supp: Vec<usize> = (0..a.len()).filter(|&i| !a[i].is_zero()).collect();
    let i0 = *supp.first()?;
    let rho: Vec<Elem> = supp.iter().map(|&i| &b[i] / &a[i]).collect();
    let t = rho[0].tower().clone();
    let z = if supp.len() == 1 {
        Elem::one(&t)
    } else {
        let gaps: Vec<i64> = supp[1..].iter().map(|&i| (i - i0) as i64).collect();
        let (g, coeffs) = ext_gcd_vec(&gaps);
        if g != 1 {
            return None;
        }
        let mut z = Elem::one(&t);
        for (k, c) in coeffs.iter().enumerate() {
            z = z * (&rho[k + 1] / &rho[0]).pow(*c);
        }
        z
    };
    let c = &rho[0] / &z.pow(i0 as i64);
    for (k, &i) in supp.iter().enumerate() {
        if rho[k] != &c * &z.pow(i as i64) {
            return None;
        }
    }
    Some((c, z))
}

/// How conjugation moves f_L inside its torus orbit or the swapped one.
pub fn cocycle(f_l: &NormalForm) -> Result<CocycleData> {
    let t = f_l.tower().clone();
    if t.level() == 0 {
        let one = Elem::one(&t);
        return Ok(CocycleData { kind: CocycleKind::Diagonal, z: one.clone(), c: one, r: None, d: BigInt::from(1) });
    }
    let d = t.top_disc().cloned().unwrap_or_else(|| BigInt::from(1));
    let conj = f_l.conj()?;
    if let Some((c, z)) = torus_ratio(&f_l.a, &conj.a) {
        return Ok(CocycleData { kind: CocycleKind::Diagonal, z, c, r: None, d });
    }
    if f_l.shape != Shape::CForm1 {
        let refl = f_l.reflected();
        if let Some((c, z)) = torus_ratio(&refl.a, &conj.a) {
            let r =
                z.inv().lower_to(&crate::arith::Tower::rationals()).and_then(|e| e.as_rational()).ok_or_else(|| {
                    Error::Unsupported(alloc::string::String::from("cocycle ratio outside the rationals"))
                })?;
            return Ok(CocycleData { kind: CocycleKind::Antidiagonal, z, c, r: Some(r), d });
        }
    }
    Err(Error::NotFieldOfModuliK)
}
