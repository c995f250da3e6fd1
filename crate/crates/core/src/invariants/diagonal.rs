use alloc::vec;
use alloc::vec::Vec;

use super::label::{Key, Label};
use super::tuple::{Entry, InvariantTuple};
use crate::arith::Elem;
use crate::binforms::NormalForm;
use crate::error::Result;
use crate::lattice::{adjust_s, lattice_data, ms_row, SSet};

/// Exponents e_0..e_m of a monomial Π a_i^{e_i}.
pub type Monomial = Vec<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemaKind {
    Generic,
    Lattice,
}

/// Which monomials make up the diagonal invariants for a given zero pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schema {
    pub m: usize,
    pub kind: SchemaKind,
    pub s: SSet,
    /// Kernel basis in S coordinates, then the complement w.
    pub basis: Vec<Vec<i64>>,
    pub complement: Vec<i64>,
    pub basis_labels: Vec<Label>,
    /// Every J entry in tuple order.
    pub monomials: Vec<(Label, Monomial)>,
}

pub fn ell_of(m: usize) -> usize {
    if m.is_multiple_of(2) {
        m / 2
    } else {
        m.div_ceil(2)
    }
}

/// i ↦ m − i on exponent vectors.
pub fn swap_conjugate(mono: &[u32]) -> Monomial {
    let mut v = mono.to_vec();
    v.reverse();
    v
}

pub fn eval_monomial(mono: &[u32], a: &[Elem]) -> Elem {
    let mut acc = Elem::one(a[0].tower());
    for (e, x) in mono.iter().zip(a) {
        if *e > 0 {
            acc = acc * x.pow(*e as i64);
        }
    }
    acc
}

pub fn degree(mono: &[u32]) -> u32 {
    mono.iter().sum()
}

/// Pairs (m − i, i) below the middle.
fn pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m.div_ceil(2)).map(|i| (m - i, i)).collect()
}

/// Whether the even-m indices 2ℓ..ℓ+2, ℓ−1 (odd m: m..ℓ+1, ℓ−1) are all nonzero.
pub fn is_generic(m: usize, nonzero: &[bool]) -> bool {
    generic_indices(m).iter().all(|&i| nonzero[i])
}

fn generic_indices(m: usize) -> Vec<usize> {
    let ell = ell_of(m);
    let top_start = if m.is_multiple_of(2) { ell + 2 } else { ell + 1 };
    let mut s: Vec<usize> = (top_start..=m).rev().collect();
    s.push(ell - 1);
    s
}

/// One index per symmetric pair: the higher if its coefficient is nonzero, else the lower.
pub fn choose_s(m: usize, nonzero: &[bool]) -> Result<SSet> {
    let mut idx = Vec::new();
    for (hi, lo) in pairs(m) {
        if nonzero[hi] {
            idx.push(hi);
        } else if nonzero[lo] {
            idx.push(lo);
        }
    }
    adjust_s(&SSet::new(idx, m), |i| nonzero[i])
}

fn to_monomial(v: &[i64], s: &SSet) -> Monomial {
    let mut mono = vec![0u32; s.m + 1];
    for (c, &i) in v.iter().zip(&s.indices) {
        mono[i] += u32::try_from(*c).expect("nonnegative lattice vector");
    }
    mono
}

impl Schema {
    pub fn generic(m: usize) -> Schema {
        let s = SSet::new(generic_indices(m), m);
        let k = s.len();
        let low = k - 1;
        let row = ms_row(&s);
        // the a_{ℓ−1} entry of the row is −1, so v_j = e_j + row_j e_{ℓ−1}
        let basis: Vec<Vec<i64>> = (0..low)
            .map(|j| {
                let mut v = vec![0i64; k];
                v[j] = 1;
                v[low] = row[j];
                v
            })
            .collect();
        let mut complement = vec![0i64; k];
        complement[low] = 1;
        Schema::assemble(m, SchemaKind::Generic, s, basis, complement, &vec![true; m + 1])
    }

    /// The schema used for this form: generic when the pattern allows, else via choose_s.
    pub fn for_form(nf: &NormalForm) -> Result<Schema> {
        let nonzero: Vec<bool> = nf.a.iter().map(|x| !x.is_zero()).collect();
        Schema::for_pattern(nf.m, &nonzero)
    }

    pub fn for_pattern(m: usize, nonzero: &[bool]) -> Result<Schema> {
        if is_generic(m, nonzero) {
            return Ok(Schema::generic(m));
        }
        let s = choose_s(m, nonzero)?;
        let (basis, complement) = if s.len() <= 1 {
            (Vec::new(), vec![1i64; s.len()])
        } else {
            let data = lattice_data(&ms_row(&s))?;
            (data.basis, data.complement)
        };
        Ok(Schema::assemble(m, SchemaKind::Lattice, s, basis, complement, nonzero))
    }

    fn assemble(
        m: usize,
        kind: SchemaKind,
        s: SSet,
        basis: Vec<Vec<i64>>,
        complement: Vec<i64>,
        nonzero: &[bool],
    ) -> Schema {
        let mut monomials: Vec<(Label, Monomial)> = Vec::new();
        if m.is_multiple_of(2) {
            let mut mono = vec![0u32; m + 1];
            mono[m / 2] = 1;
            monomials.push((Label::J1, mono));
        }
        for (hi, lo) in pairs(m) {
            if kind == SchemaKind::Generic || (nonzero[hi] && nonzero[lo]) {
                let mut mono = vec![0u32; m + 1];
                mono[hi] += 1;
                mono[lo] += 1;
                monomials.push((Label::J2(lo), mono));
            }
        }
        let mut basis_labels = Vec::new();
        let mut seen: Vec<u32> = Vec::new();
        for v in &basis {
            let mono = to_monomial(v, &s);
            let deg = degree(&mono);
            let ord = seen.iter().filter(|&&d| d == deg).count() as u32;
            seen.push(deg);
            let l = Label::J(Key { deg, ord });
            basis_labels.push(l);
            monomials.push((l, mono));
        }
        Schema { m, kind, s, basis, complement, basis_labels, monomials }
    }

    pub fn weight(&self, l: &Label) -> Option<u32> {
        self.monomials.iter().find(|(x, _)| x == l).map(|(_, mono)| degree(mono))
    }

    pub fn monomial(&self, l: &Label) -> Option<&Monomial> {
        self.monomials.iter().find(|(x, _)| x == l).map(|(_, mono)| mono)
    }

    /// The monomial whose value is the free parameter t.
    pub fn w_monomial(&self) -> Monomial {
        to_monomial(&self.complement, &self.s)
    }

    pub fn evaluate(&self, a: &[Elem]) -> InvariantTuple {
        InvariantTuple::new(
            self.monomials
                .iter()
                .map(|(l, mono)| Entry { label: *l, weight: degree(mono), value: eval_monomial(mono, a) })
                .collect(),
        )
    }
}

/// The arithmetic diagonal invariants J.
pub fn diagonal_invariants(nf: &NormalForm) -> Result<InvariantTuple> {
    Ok(Schema::for_form(nf)?.evaluate(&nf.a))
}
