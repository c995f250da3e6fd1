//! Randomized property suites over the core library, shared by `properties` and `acceptance`.
//!
//! Each suite runs `CASES` cases from a fixed seed; `HYPDESC_SEED` (decimal or 0x-hex) overrides it.

use std::fmt::Debug;

use hypdesc_core::arith::hilbert::relevant_places;
use hypdesc_core::arith::{hilbert_symbol, is_norm, solve_norm, Elem, Rational, Tower};
use hypdesc_core::binforms::{act, BinaryForm, Mat2, NormalForm, Shape};
use hypdesc_core::counterexamples::{build_family, middle_from_tau, CounterexampleParams, FamilyShape};
use hypdesc_core::descent::{
    classify_case, hyperelliptic_descend, shape_invariants, torus_ratio, verify_from_normal, DescentResult,
};
use hypdesc_core::invariants::diagonal::eval_monomial;
use hypdesc_core::invariants::{
    diagonal_invariants, dihedral_invariants, octavic_dihedral, reconstruct, shioda_expr, swap_conjugate, wp_equal,
    InvariantTuple, Schema,
};
use hypdesc_core::Error;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use super::{q, qd};

pub const CASES: u32 = 256;
pub const DEFAULT_SEED: u64 = 0x6879_7064_6573_6321;

pub fn seed() -> u64 {
    match std::env::var("HYPDESC_SEED") {
        Ok(s) => {
            let s = s.trim();
            let parsed = match s.strip_prefix("0x") {
                Some(h) => u64::from_str_radix(h, 16),
                None => s.parse(),
            };
            parsed.unwrap_or_else(|_| panic!("HYPDESC_SEED={s} is not a u64"))
        }
        Err(_) => DEFAULT_SEED,
    }
}

/// A runner with its own deterministic stream; `salt` separates the suites.
pub fn runner(salt: u64) -> TestRunner {
    let mut bytes = [0u8; 32];
    for (i, chunk) in bytes.chunks_mut(8).enumerate() {
        chunk
            .copy_from_slice(&(seed() ^ salt).wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(i as u64).to_le_bytes());
    }
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &bytes))
}

fn run<S: Strategy>(salt: u64, s: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S::Value: Debug,
{
    runner(salt).run(&s, test).map_err(|e| e.to_string())
}

fn ok<T>(r: Result<T, Error>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

const DISCS: [i64; 9] = [2, 3, 5, 6, 7, -1, -2, -3, 13];

fn disc() -> impl Strategy<Value = i64> {
    prop::sample::select(DISCS.to_vec())
}

fn elem(t: &Tower, (a, b, c): (i64, i64, i64)) -> Elem {
    qd(t, q(a, c), q(b, c))
}

fn raw() -> impl Strategy<Value = (i64, i64, i64)> {
    (-9i64..=9, -9i64..=9, 1i64..=3)
}

/// k nonzero elements of Q(√d).
fn elems(d: i64, k: usize) -> impl Strategy<Value = (i64, Vec<(i64, i64, i64)>)> {
    prop::collection::vec(raw().prop_filter("nonzero", |&(a, b, _)| a != 0 || b != 0), k).prop_map(move |v| (d, v))
}

fn tower(d: i64) -> Tower {
    Tower::quadratic(d).unwrap()
}

const SHAPES: [Shape; 3] = [Shape::CcForm, Shape::CForm1, Shape::CForm2];

/// Exponent offsets of x and z outside the core.
fn offsets(s: Shape) -> (u32, u32) {
    match s {
        Shape::CcForm => (0, 0),
        Shape::CForm1 => (0, 1),
        Shape::CForm2 => (1, 1),
    }
}

/// A normal form with every core coefficient nonzero, plus `extra` further nonzero elements.
#[derive(Clone, Debug)]
struct Sample {
    d: i64,
    shape: usize,
    n: u32,
    m: usize,
    raw: Vec<(i64, i64, i64)>,
}

impl Sample {
    fn tower(&self) -> Tower {
        tower(self.d)
    }

    fn normal_form(&self) -> NormalForm {
        let t = self.tower();
        NormalForm::new(SHAPES[self.shape], self.n, self.raw[..=self.m].iter().map(|&r| elem(&t, r)).collect())
    }

    fn extra(&self, i: usize) -> Elem {
        elem(&self.tower(), self.raw[self.m + 1 + i])
    }
}

fn samples(shapes: std::ops::Range<usize>, extra: usize) -> impl Strategy<Value = Sample> {
    (disc(), shapes, 2u32..=4, 2usize..=6).prop_flat_map(move |(d, shape, n, m)| {
        elems(d, m + 1 + extra).prop_map(move |(d, raw)| Sample { d, shape, n, m, raw })
    })
}

/// (a) Relative invariance of diagonal and dihedral invariants under diag(λ, μ) and the swap.
pub fn suite_a() -> Result<(), String> {
    run(0xa, samples(0..3, 2), |s| {
        let nf = s.normal_form();
        let (lam, mu) = (s.extra(0), s.extra(1));
        let f = nf.to_form();
        let g = ok(act(&Mat2::diag(&lam, &mu), &f))?;
        let (o1, o2) = offsets(nf.shape);
        let n = nf.n as i64;
        let factor: Vec<Elem> =
            (0..=nf.m as i64).map(|i| lam.pow(i * n + o1 as i64) * mu.pow((nf.m as i64 - i) * n + o2 as i64)).collect();
        let nf2 = nf.with_coeffs(nf.a.iter().zip(&factor).map(|(a, c)| a * c).collect());
        prop_assert_eq!(nf2.to_form(), g);

        let schema = ok(Schema::for_form(&nf))?;
        let j1 = ok(diagonal_invariants(&nf))?;
        let j2 = ok(diagonal_invariants(&nf2))?;
        for (label, mono) in &schema.monomials {
            let expect = j1.get(label).unwrap() * &eval_monomial(mono, &factor);
            prop_assert_eq!(j2.get(label).unwrap(), &expect, "law for {}", label);
        }
        prop_assert!(ok(wp_equal(&j1, &j2))?);
        if nf.shape == Shape::CForm1 {
            return Ok(());
        }
        let i1 = ok(dihedral_invariants(&nf))?;
        prop_assert!(ok(wp_equal(&i1, &ok(dihedral_invariants(&nf2))?))?);

        let refl = nf.reflected();
        prop_assert_eq!(ok(act(&Mat2::swap(nf.tower()), &f))?, refl.to_form());
        prop_assert!(ok(wp_equal(&i1, &ok(dihedral_invariants(&refl))?))?);
        let jr = ok(diagonal_invariants(&refl))?;
        for (label, mono) in &schema.monomials {
            prop_assert_eq!(jr.get(label).unwrap(), &eval_monomial(&swap_conjugate(mono), &nf.a));
        }
        Ok(())
    })
}

/// (b) reconstruct inverts the diagonal invariants up to the torus, for the default and a random parameter.
pub fn suite_b() -> Result<(), String> {
    run(0xb, samples(0..3, 1), |s| {
        let nf = s.normal_form();
        let schema = ok(Schema::for_form(&nf))?;
        let j = ok(diagonal_invariants(&nf))?;
        for t in [None, Some(s.extra(0))] {
            let back = ok(reconstruct(&j, &schema, nf.shape, nf.n, t.as_ref()))?;
            prop_assert_eq!((back.shape, back.n, back.m), (nf.shape, nf.n, nf.m));
            prop_assert!(ok(wp_equal(&j, &ok(diagonal_invariants(&back))?))?);
            let tw = nf.tower().join(back.tower()).unwrap();
            let a: Vec<Elem> = nf.a.iter().map(|x| x.lift(&tw)).collect();
            let b: Vec<Elem> = back.a.iter().map(|x| x.lift(&tw)).collect();
            prop_assert!(torus_ratio(&a, &b).is_some(), "not diagonally equivalent");
        }
        Ok(())
    })
}

fn rat() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_filter_map("nonzero", |(n, d)| (n != 0).then(|| q(n, d)))
}

/// (c) Hilbert product formula and is_norm stability under norms.
pub fn suite_c() -> Result<(), String> {
    let s = (rat(), rat(), disc(), raw().prop_filter("nonzero", |&(a, b, _)| a != 0 || b != 0));
    run(0xc, s, |(a, b, d, l)| {
        let product: i32 = relevant_places(&[&a, &b]).iter().map(|v| hilbert_symbol(&a, &b, v)).product();
        prop_assert_eq!(product, 1);
        let t = tower(d);
        let n = ok(elem(&t, l).field_norm())?.as_rational().unwrap();
        let dd = BigInt::from(d);
        prop_assert_eq!(is_norm(&(&a * &n), &dd), is_norm(&a, &dd));
        Ok(())
    })
}

/// (d) solve_norm returns an element of the requested norm exactly when one exists.
pub fn suite_d() -> Result<(), String> {
    let s = (disc(), raw().prop_filter("nonzero", |&(a, b, _)| a != 0 || b != 0), rat());
    run(0xd, s, |(d, l, r)| {
        let t = tower(d);
        let dd = BigInt::from(d);
        let target = ok(elem(&t, l).field_norm())?.as_rational().unwrap();
        let sol = solve_norm(&target, &dd);
        prop_assert!(sol.is_some(), "no solution for the norm {}", target);
        prop_assert_eq!(ok(sol.unwrap().field_norm())?.as_rational(), Some(target));
        match solve_norm(&r, &dd) {
            Some(x) => prop_assert_eq!(ok(x.field_norm())?.as_rational(), Some(r)),
            None => prop_assert!(!is_norm(&r, &dd)),
        }
        Ok(())
    })
}

#[derive(Clone, Debug)]
struct Family {
    d1: i64,
    ell: usize,
    n: u32,
    xz: bool,
    /// d2 = x² − d1 y² when set, else the free rational.
    norm_d2: Option<(i64, i64)>,
    d2: Rational,
    u: usize,
    raw: Vec<(i64, i64, i64)>,
}

fn families() -> impl Strategy<Value = Family> {
    let d1 = prop::sample::select(vec![2i64, 3, 5, 7, -1, -2, -3]);
    let norm = prop_oneof![Just(None), (-5i64..=5, -5i64..=5).prop_map(Some)];
    (d1, 1usize..=3, 2u32..=4, any::<bool>(), norm, rat(), 0usize..3).prop_flat_map(
        |(d1, ell, n, xz, norm_d2, d2, u)| {
            elems(d1, ell + 2).prop_map(move |(d1, raw)| Family { d1, ell, n, xz, norm_d2, d2: d2.clone(), u, raw })
        },
    )
}

/// (e) Non-norm d2 gives an obstruction (or the conic model where one exists); norm d2 gives a verified model.
pub fn suite_e() -> Result<(), String> {
    run(0xe, families(), |f| {
        let t = tower(f.d1);
        let w = elem(&t, f.raw[f.ell + 1]);
        let u = match f.u {
            0 => Elem::one(&t),
            1 => Elem::from_int(&t, -1),
            _ => &w / &ok(w.conj())?,
        };
        let d2 = match f.norm_d2 {
            Some((x, y)) => q(x * x - f.d1 * y * y, 1),
            None => f.d2.clone(),
        };
        prop_assume!(d2 != q(0, 1));
        let mut upper: Vec<Elem> = f.raw[..f.ell].iter().map(|&r| elem(&t, r)).collect();
        upper.push(ok(middle_from_tau(&elem(&t, f.raw[f.ell]), &u))?);
        let params = CounterexampleParams {
            d1: BigInt::from(f.d1),
            d2,
            u,
            n: f.n,
            ell: f.ell,
            upper,
            shape: if f.xz { FamilyShape::Xz } else { FamilyShape::Plain },
        };
        let built = build_family(&params);
        prop_assume!(built.is_ok());
        let (nf, cert) = built.unwrap();
        prop_assume!(cert.galois_stable && cert.r_matches_d2 && cert.exact_cn);
        let case = ok(classify_case(nf.shape, nf.n, nf.m, nf.genus()))?;
        let res = ok(hyperelliptic_descend(&nf, &case))?;
        prop_assert!(verify_from_normal(&nf, &res), "unverified {:?}", res);
        if cert.d2_is_norm {
            prop_assert!(matches!(res, DescentResult::Model { .. }), "expected a model");
        } else if case.conic_eligible {
            prop_assert!(matches!(res, DescentResult::Conic { .. }), "expected a conic model");
        } else {
            prop_assert!(res.is_obstructed());
        }
        Ok(())
    })
}

fn elem_or_zero() -> impl Strategy<Value = Option<(i64, i64, i64)>> {
    prop_oneof![1 => Just(None), 4 => raw().prop_filter("nonzero", |&(a, b, _)| a != 0 || b != 0).prop_map(Some)]
}

/// (f) wp_equal is reflexive, symmetric and transitive on scaled tuples.
pub fn suite_f() -> Result<(), String> {
    let s = samples(0..3, 3).prop_flat_map(|s| {
        let k = s.m + 6;
        (Just(s), prop::collection::vec(elem_or_zero(), k))
    });
    run(0xf, s, |(s, vals)| {
        let nf = s.normal_form();
        let template = ok(shape_invariants(&nf))?;
        let t = s.tower();
        let values: Vec<Elem> = (0..template.len())
            .map(|i| vals.get(i).copied().flatten().map(|r| elem(&t, r)).unwrap_or_else(|| Elem::zero(&t)))
            .collect();
        let a = InvariantTuple::with_values(&template, values);
        let b = a.scaled(&s.extra(0));
        let c = b.scaled(&s.extra(1));
        prop_assert!(ok(wp_equal(&a, &a))?);
        prop_assert!(ok(wp_equal(&a, &b))? && ok(wp_equal(&b, &a))?);
        prop_assert!(ok(wp_equal(&b, &c))? && ok(wp_equal(&a, &c))?);
        if let Some(i) = a.entries().iter().position(|e| !e.value.is_zero()) {
            let mut v = a.values();
            v[i] = &v[i] * &s.extra(2);
            let p = InvariantTuple::with_values(&a, v);
            prop_assert_eq!(ok(wp_equal(&a, &p))?, ok(wp_equal(&p, &a))?);
            prop_assert_eq!(ok(wp_equal(&p, &b))?, ok(wp_equal(&p, &a))?);
        }
        Ok(())
    })
}

/// (g) The Shioda expressions scale by (λμ)^{4w} under diag(λ, μ) and are fixed by the swap.
pub fn suite_g() -> Result<(), String> {
    let s = (disc(), prop::collection::vec(-9i64..=9, 9), elems(2, 2).prop_map(|(_, v)| v))
        .prop_filter("degree 8", |(_, c, _)| c[8] != 0 || c[0] != 0);
    run(0x9, s, |(d, c, lm)| {
        let t = tower(d);
        let f = BinaryForm::from_ints(&t, &c);
        let (lam, mu) = (elem(&t, lm[0]), elem(&t, lm[1]));
        let (s2, s3) = shioda_expr(&octavic_dihedral(&f));
        let g = ok(act(&Mat2::diag(&lam, &mu), &f))?;
        let (g2, g3) = shioda_expr(&octavic_dihedral(&g));
        let lm = &lam * &mu;
        prop_assert_eq!(g2, &s2 * &lm.pow(8));
        prop_assert_eq!(g3, &s3 * &lm.pow(12));
        let h = ok(act(&Mat2::swap(&t), &f))?;
        prop_assert_eq!(shioda_expr(&octavic_dihedral(&h)), (s2, s3));
        Ok(())
    })
}

pub type Suite = fn() -> Result<(), String>;

pub const SUITES: [(&str, Suite); 7] = [
    ("a relative invariance", suite_a),
    ("b reconstruction round trip", suite_b),
    ("c Hilbert product formula and norm stability", suite_c),
    ("d solve_norm postcondition", suite_d),
    ("e counterexample families", suite_e),
    ("f wp_equal laws", suite_f),
    ("g Shioda relative invariance", suite_g),
];
