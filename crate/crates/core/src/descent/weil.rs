use num_bigint::BigInt;

use crate::arith::{solve_norm, Elem, Rational, Tower};
use crate::binforms::Mat2;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilData {
    /// (1, λ^σ; β, λ^σ β^σ)
    pub n_mat: Mat2,
    pub lambda: Elem,
    pub beta: Elem,
    pub nu: Rational,
}

impl WeilData {
    /// N^σ = λ·N·M⁻¹ with M = (0, ν; 1, 0).
    pub fn satisfies_meq(&self) -> bool {
        let t = self.n_mat.tower().clone();
        let nu = Elem::from_rational(&t, self.nu.clone());
        let m_inv = Mat2::new(Elem::zero(&t), Elem::one(&t), nu.inv(), Elem::zero(&t));
        match self.n_mat.conj() {
            Ok(ns) => ns == (&self.n_mat * &m_inv).scale(&self.lambda),
            Err(_) => false,
        }
    }
}

/// The matrix of the Weil descent for the cocycle (0, r; 1, 0), with β = √d.
pub fn weil_matrix(r: &Rational, d: &BigInt) -> Option<WeilData> {
    let lambda = solve_norm(r, d)?;
    let beta = Elem::generator(lambda.tower());
    weil_matrix_with(r, &lambda, &beta).ok()
}

/// As `weil_matrix` with a chosen λ of norm r and generator β.
pub fn weil_matrix_with(r: &Rational, lambda: &Elem, beta: &Elem) -> Result<WeilData> {
    let t: Tower =
        lambda.tower().join(beta.tower()).ok_or(Error::InvalidDisc(alloc::string::String::from("λ and β")))?;
    let lambda = lambda.lift(&t);
    let beta = beta.lift(&t);
    if lambda.field_norm()?.as_rational().as_ref() != Some(r) {
        return Err(Error::Inconsistent(alloc::format!("λ = {lambda} does not have norm {r}")));
    }
    let bs = beta.conj()?;
    if bs == beta {
        return Err(Error::Inconsistent(alloc::string::String::from("β does not generate L")));
    }
    let ls = lambda.conj()?;
    let n_mat = Mat2::new(Elem::one(&t), ls.clone(), beta.clone(), &ls * &bs);
    let w = WeilData { n_mat, lambda, beta, nu: r.clone() };
    if !w.satisfies_meq() {
        return Err(Error::Internal(alloc::string::String::from("Weil matrix identity")));
    }
    Ok(w)
}
