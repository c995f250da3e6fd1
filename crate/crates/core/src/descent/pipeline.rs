use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::case::{classify_case, CaseDescriptor};
use super::chain::{chain_reaches, collect, strip_trailing_mats, Step};
use super::cocycle::{cocycle, torus_ratio, CocycleKind};
use super::conic::{conic_descend, phi_sigma_identity, ConicModel};
use super::cover::{cyclic_cover, pair_form};
use super::weil::{weil_matrix, WeilData};
use crate::arith::{is_norm, Elem, Rational, Tower};
use crate::binforms::{act, classify_normal_form, diagonalize_automorphism, BinaryForm, Mat2, NormalForm, Shape};
use crate::error::{Error, Result};
use crate::invariants::{
    diagonal_invariants, dihedral_invariants, extension_data, reconstruct, split_dihedral, wp_equal, wp_normalize,
    InvariantTuple, Label, Schema,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DescentResult {
    /// y² = f₀ over k; the chain carries the normal form onto a multiple of f₀.
    Model {
        f0: BinaryForm,
        chain: Vec<Step>,
    },
    /// The chain carries the normal form onto the form pulled back from the conic.
    Conic {
        model: ConicModel,
        chain: Vec<Step>,
    },
    Obstructed {
        r: Rational,
        d: BigInt,
        label: Option<Label>,
    },
}

impl DescentResult {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, DescentResult::Obstructed { .. })
    }

    pub fn chain(&self) -> &[Step] {
        match self {
            DescentResult::Model { chain, .. } | DescentResult::Conic { chain, .. } => chain,
            DescentResult::Obstructed { .. } => &[],
        }
    }
}

/// A full run from an input form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Descent {
    pub normal_form: NormalForm,
    pub case: CaseDescriptor,
    /// Input → normal form; `None` when the normal form was rebuilt from invariants.
    pub to_normal: Option<Vec<Step>>,
    /// The normal form over two quadratic levels that was replaced through its invariants.
    pub rebuilt_from: Option<NormalForm>,
    pub result: DescentResult,
}

impl Descent {
    /// Every step from the input form to the final model.
    pub fn full_chain(&self) -> Option<Vec<Step>> {
        self.to_normal.as_ref().map(|p| collect(&[p, self.result.chain()]))
    }
}

/// The invariants that classify normal forms of this shape.
pub fn shape_invariants(nf: &NormalForm) -> Result<InvariantTuple> {
    match nf.shape {
        Shape::CForm1 => diagonal_invariants(nf),
        _ => dihedral_invariants(nf),
    }
}

fn rationals() -> Tower {
    Tower::rationals()
}

/// Divide by the first nonzero coefficient and drop to ℚ.
fn rationalize(f: &BinaryForm) -> Result<BinaryForm> {
    let lead = f.coeffs().iter().find(|c| !c.is_zero()).ok_or(Error::Internal(String::from("zero form")))?;
    f.scale(&lead.inv()).lower_to(&rationals()).ok_or(Error::Internal(String::from("form is not k-rational")))
}

fn check(chain: &[Step], f_l: &NormalForm, f0: &BinaryForm) -> Result<()> {
    if !f0.is_squarefree() {
        return Err(Error::Internal(String::from("descended form is not squarefree")));
    }
    if !chain_reaches(chain, &f_l.to_form(), f0) {
        return Err(Error::Internal(String::from("chain does not reach the model")));
    }
    Ok(())
}

fn direct(f_l: &NormalForm) -> Result<DescentResult> {
    if f_l.tower().level() == 0 {
        return Ok(DescentResult::Model { f0: f_l.to_form(), chain: Vec::new() });
    }
    let j = wp_normalize(&diagonal_invariants(f_l)?)?;
    if j.tower().level() != 0 {
        return Err(Error::FieldOfModuliLarger);
    }
    let schema = Schema::for_form(f_l)?;
    let nf0 = reconstruct(&j, &schema, f_l.shape, f_l.n, None)?.lower();
    let t = f_l.tower().clone();
    let target: Vec<Elem> = nf0.a.iter().map(|x| x.lift(&t)).collect();
    let (_, z) =
        torus_ratio(&f_l.a, &target).ok_or(Error::Internal(String::from("reconstruction left the torus orbit")))?;
    let chain = vec![Step::Torus { x: z, y: Elem::one(&t), n: f_l.n }];
    let f0 = nf0.to_form();
    check(&chain, f_l, &f0)?;
    Ok(DescentResult::Model { f0, chain })
}

/// Branch (b): push the core through N and pull back along the cyclic cover.
pub fn weil_descend(f_l: &NormalForm, w: &WeilData) -> Result<DescentResult> {
    let t = f_l.tower().clone();
    let n_inv = w.n_mat.lift(&t).inv()?;
    let s0 = rationalize(&act(&n_inv, &f_l.core())?)?;
    let pair = pair_form(&w.beta.inv())?;
    let cover = cyclic_cover(&pair, f_l.n)?;
    let mut f0 = s0.compose(&cover.p, &cover.q);
    if f_l.shape == Shape::CForm2 {
        f0 = f0.mul(&cover.ramification);
    }
    let delta = cover.delta.clone().ok_or(Error::Internal(String::from("Weil pair is rational")))?;
    let sq = if t.top_disc() == Some(&delta) {
        Elem::generator(&t)
    } else {
        return Err(Error::Internal(String::from("cover discriminant differs from L")));
    };
    let half = Elem::frac(&t, 1, 2);
    let inv2s = (&sq * &Elem::from_int(&t, 2)).inv();
    let e = Mat2::new(half.clone(), half, inv2s.clone(), -&inv2s);
    let g = &(&n_inv * &cover.affine.lift(&t)) * &e;
    let c = Mat2::new(Elem::one(&t), sq.clone(), Elem::one(&t), -&sq);
    let n = f_l.n;
    let chain = if g.is_diagonal() {
        vec![Step::Torus { x: g.a.clone(), y: g.d.clone(), n }, Step::Mat(c)]
    } else if g.is_antidiagonal() {
        vec![Step::Torus { x: g.b.clone(), y: g.c.clone(), n }, Step::Mat(Mat2::swap(&t)), Step::Mat(c)]
    } else {
        return Err(Error::Internal(String::from("cover does not match the cocycle")));
    };
    check(&chain, f_l, &f0)?;
    Ok(DescentResult::Model { f0, chain })
}

/// Dispatch on the cocycle of a normal form over k or a quadratic extension of k.
pub fn hyperelliptic_descend(f_l: &NormalForm, case: &CaseDescriptor) -> Result<DescentResult> {
    if f_l.tower().level() > 1 {
        return Err(Error::Unsupported(String::from("normal form over two quadratic levels")));
    }
    if case.shape != f_l.shape || case.n != f_l.n || case.m != f_l.m {
        return Err(Error::Inconsistent(String::from("case does not describe this normal form")));
    }
    let co = cocycle(f_l)?;
    if co.kind == CocycleKind::Diagonal || f_l.shape == Shape::CForm1 {
        return direct(f_l);
    }
    let r = co.r.clone().ok_or(Error::Internal(String::from("antidiagonal cocycle without r")))?;
    let d = co.d.clone();
    if let Some(w) = weil_matrix(&r, &d) {
        return weil_descend(f_l, &w);
    }
    if case.always_descends {
        return Err(Error::Internal(alloc::format!("r = {r} is not a norm in an unconditional row")));
    }
    if case.conic_eligible {
        let model = conic_descend(f_l, &r, &d)?;
        let chain = vec![model.torus_step(f_l.tower())];
        return Ok(DescentResult::Conic { model, chain });
    }
    Ok(DescentResult::Obstructed { r, d, label: case.obstruction_label })
}

/// Normal form of f, diagonalizing `aut` first when given; returns the steps taken.
pub fn normalize_input(f: &BinaryForm, aut: Option<&Mat2>) -> Result<(Vec<Step>, NormalForm)> {
    let mut steps = Vec::new();
    let mut g = f.clone();
    if let Some(m) = aut {
        let (a, h) = diagonalize_automorphism(f, m)?;
        steps.push(Step::Mat(a));
        g = h;
    }
    if let Some(nf) = classify_normal_form(&g)? {
        return Ok((steps, nf));
    }
    let big_n = g.degree();
    if g.coeff(0).is_zero() && !g.coeff(big_n).is_zero() {
        let s = Mat2::swap(g.tower());
        g = act(&s, &g)?;
        steps.push(Step::Mat(s));
        if let Some(nf) = classify_normal_form(&g)? {
            return Ok((steps, nf));
        }
    }
    Err(Error::NoNormalForm)
}

/// Replace a normal form over two quadratic levels by one over k(√d) with the same invariants.
fn rebuild(nf: &NormalForm) -> Result<NormalForm> {
    let i = wp_normalize(&shape_invariants(nf)?)?;
    if i.tower().level() != 0 {
        return Err(Error::FieldOfModuliLarger);
    }
    let schema = Schema::for_form(nf)?;
    let j = if nf.shape == Shape::CForm1 {
        i
    } else {
        let (d, _) = extension_data(&i)?;
        split_dihedral(&i, &d)?
    };
    let out = reconstruct(&j, &schema, nf.shape, nf.n, None)?.lower();
    let a = shape_invariants(&out)?;
    let b = shape_invariants(nf)?;
    if !wp_equal(&a, &b)? {
        return Err(Error::Internal(String::from("rebuilt normal form has other invariants")));
    }
    Ok(out)
}

pub fn descend(f: &BinaryForm, aut: Option<&Mat2>) -> Result<Descent> {
    let (steps, nf) = normalize_input(f, aut)?;
    let (normal_form, to_normal, rebuilt_from) =
        if nf.tower().level() > 1 { (rebuild(&nf)?, None, Some(nf)) } else { (nf, Some(steps), None) };
    let case = classify_case(normal_form.shape, normal_form.n, normal_form.m, normal_form.genus())?;
    let result = hyperelliptic_descend(&normal_form, &case)?;
    Ok(Descent { normal_form, case, to_normal, rebuilt_from, result })
}

/// Checks a result from its normal form: chain, squarefreeness, rationality and invariants.
pub fn verify_from_normal(f_l: &NormalForm, result: &DescentResult) -> bool {
    match result {
        DescentResult::Model { f0, chain } => {
            if f0.tower().level() != 0 || !f0.is_squarefree() || !chain_reaches(chain, &f_l.to_form(), f0) {
                return false;
            }
            let back = match strip_trailing_mats(chain, &f0.lift(f_l.tower())) {
                Ok(b) => b,
                Err(_) => return false,
            };
            let nf = match classify_normal_form(&back) {
                Ok(Some(nf)) => nf,
                _ => return false,
            };
            match (shape_invariants(&nf), shape_invariants(f_l)) {
                (Ok(a), Ok(b)) => wp_equal(&a, &b).unwrap_or(false),
                _ => false,
            }
        }
        DescentResult::Conic { model, chain } => {
            let g = match super::chain::apply_chain(chain, &f_l.to_form()) {
                Ok(g) => g,
                Err(_) => return false,
            };
            model.is_rational()
                && model.pulls_back_to(&g)
                && model.cover_identity()
                && phi_sigma_identity(&model.r, &model.d).unwrap_or(false)
        }
        DescentResult::Obstructed { r, d, .. } => match cocycle(f_l) {
            Ok(co) => co.kind == CocycleKind::Antidiagonal && co.r.as_ref() == Some(r) && &co.d == d && !is_norm(r, d),
            Err(_) => false,
        },
    }
}

/// Checks a run against its input form.
pub fn verify(f_input: &BinaryForm, d: &Descent) -> bool {
    match &d.to_normal {
        Some(steps) => {
            if !chain_reaches(steps, f_input, &d.normal_form.to_form()) {
                return false;
            }
        }
        None => {
            let src = match &d.rebuilt_from {
                Some(s) => s,
                None => return false,
            };
            let ok = match (shape_invariants(src), shape_invariants(&d.normal_form)) {
                (Ok(a), Ok(b)) => wp_equal(&a, &b).unwrap_or(false),
                _ => false,
            };
            if !ok {
                return false;
            }
        }
    }
    verify_from_normal(&d.normal_form, &d.result)
}
