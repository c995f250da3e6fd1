use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::chain::Step;
use super::ternary::{reduced_monomials, TernaryForm};
use crate::arith::hilbert::relevant_places;
use crate::arith::{hilbert_symbol, Elem, Rational, Tower};
use crate::binforms::{act, BinaryForm, Mat2, NormalForm};
use crate::error::{Error, Result};

/// x² + λ_c y² + μ_c z² = 0 with a branch divisor and a cyclic self-cover over k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicModel {
    pub r: Rational,
    pub d: BigInt,
    pub n: u32,
    pub lambda_c: Rational,
    pub mu_c: Rational,
    /// Degree (deg f)/2, reduced modulo the conic.
    pub branch_form: TernaryForm,
    pub cover: [TernaryForm; 3],
}

fn qelem(t: &Tower, q: &Rational) -> Elem {
    Elem::from_rational(t, q.clone())
}

impl ConicModel {
    pub fn tower(&self) -> Result<Tower> {
        Tower::from_discs(core::slice::from_ref(&self.d))
    }

    /// φ(t₁ : t₂) = (t₁² + r t₂² : 2r t₁t₂ : (r t₂² − t₁²)/√d), over k(√d).
    pub fn parametrization(&self) -> Result<[BinaryForm; 3]> {
        parametrization(&self.r, &self.d)
    }

    /// The coordinate change x ↦ xⁿ / r^{(n−1)/2} composed after the normal form.
    pub fn torus_step(&self, t: &Tower) -> Step {
        let rho = num_traits::pow(self.r.clone(), ((self.n - 1) / 2) as usize);
        Step::Torus { x: Elem::one(t), y: qelem(t, &rho), n: self.n }
    }

    /// φ*(branch_form) ∝ g.
    pub fn pulls_back_to(&self, g: &BinaryForm) -> bool {
        let phi = match self.parametrization() {
            Ok(p) => p,
            Err(_) => return false,
        };
        let b = self.branch_form.pullback(&phi);
        let t = match b.tower().join(g.tower()) {
            Some(t) => t,
            None => return false,
        };
        crate::binforms::proportional(&b.lift(&t), &g.lift(&t)).is_some()
    }

    /// cover ∘ φ ∝ φ ∘ (t₁ⁿ : r^{(n−1)/2} t₂ⁿ).
    pub fn cover_identity(&self) -> bool {
        let phi = match self.parametrization() {
            Ok(p) => p,
            Err(_) => return false,
        };
        let t = phi[0].tower().clone();
        let rho = num_traits::pow(self.r.clone(), ((self.n - 1) / 2) as usize);
        let n = self.n as usize;
        let p = BinaryForm::monomial(&t, n, 0);
        let q = BinaryForm::monomial(&t, 0, n).scale(&qelem(&t, &rho));
        let lhs: Vec<BinaryForm> = self.cover.iter().map(|c| c.pullback(&phi)).collect();
        let rhs: Vec<BinaryForm> = phi.iter().map(|f| f.compose(&p, &q)).collect();
        triple_proportional(&lhs, &rhs)
    }

    pub fn is_rational(&self) -> bool {
        let q = Tower::rationals();
        self.branch_form.tower().level() == 0
            && self.cover.iter().all(|c| c.tower() == &q)
            && self.lambda_c == -self.r.recip()
            && self.mu_c == -Rational::from_integer(self.d.clone())
    }
}

fn triple_proportional(a: &[BinaryForm], b: &[BinaryForm]) -> bool {
    let mut ratio: Option<Elem> = None;
    for (x, y) in a.iter().zip(b) {
        let t = match x.tower().join(y.tower()) {
            Some(t) => t,
            None => return false,
        };
        let (x, y) = (x.lift(&t), y.lift(&t));
        if x.degree() != y.degree() {
            return false;
        }
        for (u, v) in x.coeffs().iter().zip(y.coeffs()) {
            if u.is_zero() != v.is_zero() {
                return false;
            }
            if u.is_zero() {
                continue;
            }
            let c = u / v;
            match &ratio {
                Some(r0) if *r0 != c => return false,
                Some(_) => {}
                None => ratio = Some(c),
            }
        }
    }
    ratio.is_some()
}

pub fn parametrization(r: &Rational, d: &BigInt) -> Result<[BinaryForm; 3]> {
    let t = Tower::from_discs(core::slice::from_ref(d))?;
    let s_inv = Elem::generator(&t).inv();
    let re = qelem(&t, r);
    let zero = Elem::zero(&t);
    let one = Elem::one(&t);
    Ok([
        BinaryForm::new(vec![re.clone(), zero.clone(), one.clone()]),
        BinaryForm::new(vec![zero.clone(), &re * &Elem::from_int(&t, 2), zero.clone()]),
        BinaryForm::new(vec![&re * &s_inv, zero, -&s_inv]),
    ])
}

/// φ^σ = φ∘α for α(t₁ : t₂) = (r t₂ : t₁), up to a scalar.
pub fn phi_sigma_identity(r: &Rational, d: &BigInt) -> Result<bool> {
    let phi = parametrization(r, d)?;
    let t = phi[0].tower().clone();
    let alpha = Mat2::new(Elem::zero(&t), qelem(&t, r), Elem::one(&t), Elem::zero(&t));
    let conj: Vec<BinaryForm> = phi.iter().map(|f| f.conj()).collect::<Result<_>>()?;
    let moved: Vec<BinaryForm> = phi.iter().map(|f| act(&alpha, f)).collect::<Result<_>>()?;
    Ok(triple_proportional(&conj, &moved))
}

/// Conics x² + λy² + μz² = 0 agree over ℚ iff their Hilbert symbols (−λ, −μ)_v agree everywhere.
pub fn conics_equivalent(c1: (&Rational, &Rational), c2: (&Rational, &Rational)) -> bool {
    let (a1, b1) = (-c1.0, -c1.1);
    let (a2, b2) = (-c2.0, -c2.1);
    relevant_places(&[&a1, &b1, &a2, &b2]).iter().all(|p| hilbert_symbol(&a1, &b1, p) == hilbert_symbol(&a2, &b2, p))
}

/// Exact solve of a square system over a field; columns are the unknowns' coefficient vectors.
fn solve(columns: &[Vec<Elem>], rhs: &[Elem]) -> Option<Vec<Elem>> {
    let n = columns.len();
    let rows = rhs.len();
    let t = rhs[0].tower().clone();
    let mut m: Vec<Vec<Elem>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Elem> = columns.iter().map(|c| c[i].lift(&t)).collect();
            row.push(rhs[i].lift(&t));
            row
        })
        .collect();
    let mut piv_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for k in c..=n {
            m[r][k] = &m[r][k] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..=n {
                    let v = &m[r][k] * &f;
                    m[i][k] = &m[i][k] - &v;
                }
            }
        }
        piv_cols.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !m[i][n].is_zero()) || piv_cols.len() < n {
        return None;
    }
    let mut x = vec![Elem::zero(&t); n];
    for (i, &c) in piv_cols.iter().enumerate() {
        x[c] = m[i][n].clone();
    }
    Some(x)
}

/// Cover components of degree n over k, before reduction.
fn cover_triple(r: &Rational, d: &BigInt, n: u32) -> [TernaryForm; 3] {
    let t = Tower::rationals();
    let rho = num_traits::pow(r.clone(), ((n - 1) / 2) as usize);
    let mut f1 = TernaryForm::zero(&t, n);
    let mut f3 = TernaryForm::zero(&t, n);
    let mut binom = BigInt::one();
    for k in 0..=n {
        let c = Rational::from_integer(BigInt::from(2) * &binom * num_traits::pow(d.clone(), (k / 2) as usize));
        let term = TernaryForm::monomial(qelem(&t, &c), (n - k, 0, k));
        if k % 2 == 0 {
            f1 = f1.add(&term);
        } else {
            f3 = f3.add(&term);
        }
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    let c2 = Rational::from_integer(2.into()) * rho * num_traits::pow(r.recip(), (n - 1) as usize);
    let f2 = TernaryForm::monomial(qelem(&t, &c2), (0, n, 0));
    [f1, f2, f3]
}

/// Non-hyperelliptic descent data for a normal form whose cocycle is (0, r; 1, 0) with r not a norm.
pub fn conic_descend(f_l: &NormalForm, r: &Rational, d: &BigInt) -> Result<ConicModel> {
    let n = f_l.n;
    if n.is_multiple_of(2) || f_l.genus().is_multiple_of(2) {
        return Err(Error::Inconsistent(String::from("conic descent needs g and n odd")));
    }
    if r.is_zero() {
        return Err(Error::Inconsistent(String::from("r = 0")));
    }
    let t = Tower::from_discs(core::slice::from_ref(d))?;
    let q = Tower::rationals();
    let lambda_c = -r.recip();
    let mu_c = -Rational::from_integer(d.clone());
    let mut model = ConicModel {
        r: r.clone(),
        d: d.clone(),
        n,
        lambda_c: lambda_c.clone(),
        mu_c: mu_c.clone(),
        branch_form: TernaryForm::zero(&q, 0),
        cover: cover_triple(r, d, n),
    };
    let (lq, mq) = (qelem(&q, &lambda_c), qelem(&q, &mu_c));
    for c in model.cover.iter_mut() {
        *c = c.reduce(&lq, &mq);
    }
    let g = model.torus_step(&t).apply(&f_l.to_form().lift(&t))?;
    let deg = g.degree() as u32 / 2;
    let phi = model.parametrization()?;
    let monos = reduced_monomials(deg);
    let columns: Vec<Vec<Elem>> =
        monos.iter().map(|&e| TernaryForm::monomial(Elem::one(&t), e).pullback(&phi).coeffs().to_vec()).collect();
    let b = solve(&columns, g.coeffs()).ok_or(Error::Internal(String::from("branch form system is singular")))?;
    let pivot = b.iter().find(|x| !x.is_zero()).ok_or(Error::Internal(String::from("zero branch form")))?.clone();
    let terms: Vec<(super::ternary::Exps, Elem)> = monos
        .iter()
        .zip(&b)
        .map(|(&e, c)| {
            (c / &pivot)
                .lower_to(&q)
                .map(|c| (e, c))
                .ok_or(Error::Internal(String::from("branch form is not k-rational")))
        })
        .collect::<Result<_>>()?;
    model.branch_form = TernaryForm::from_terms(&q, deg, terms);
    if !model.pulls_back_to(&g) || !model.cover_identity() {
        return Err(Error::Internal(String::from("conic model identities")));
    }
    Ok(model)
}
