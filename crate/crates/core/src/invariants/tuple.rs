use alloc::vec::Vec;
use core::fmt;

use super::label::Label;
use crate::arith::integer::ext_gcd_vec;
use crate::arith::{Elem, Tower};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub label: Label,
    pub weight: u32,
    pub value: Elem,
}

/// A point of weighted projective space, entries ordered by (weight, label).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTuple {
    entries: Vec<Entry>,
}

impl InvariantTuple {
    pub fn new(mut entries: Vec<Entry>) -> InvariantTuple {
        entries.sort_by_key(|a| (a.weight, a.label));
        if let Some(first) = entries.first() {
            let t = entries.iter().fold(first.value.tower().clone(), |t, e| {
                t.join(e.value.tower()).expect("tuple values in incompatible towers")
            });
            for e in entries.iter_mut() {
                e.value = e.value.lift(&t);
            }
        }
        InvariantTuple { entries }
    }

    /// Same labels and weights as `template`, new values in its order.
    pub fn with_values(template: &InvariantTuple, values: Vec<Elem>) -> InvariantTuple {
        assert_eq!(template.len(), values.len(), "value count does not match the schema");
        InvariantTuple::new(
            template
                .entries
                .iter()
                .zip(values)
                .map(|(e, v)| Entry { label: e.label, weight: e.weight, value: v })
                .collect(),
        )
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn labels(&self) -> Vec<Label> {
        self.entries.iter().map(|e| e.label).collect()
    }

    pub fn values(&self) -> Vec<Elem> {
        self.entries.iter().map(|e| e.value.clone()).collect()
    }

    pub fn get(&self, l: &Label) -> Option<&Elem> {
        self.entries.iter().find(|e| e.label == *l).map(|e| &e.value)
    }

    pub fn weight_of(&self, l: &Label) -> Option<u32> {
        self.entries.iter().find(|e| e.label == *l).map(|e| e.weight)
    }

    /// The sub-tuple on the given labels, or `None` if one is missing.
    pub fn select(&self, labels: &[Label]) -> Option<InvariantTuple> {
        let entries: Option<Vec<Entry>> =
            labels.iter().map(|l| self.entries.iter().find(|e| e.label == *l).cloned()).collect();
        Some(InvariantTuple::new(entries?))
    }

    pub fn tower(&self) -> Tower {
        self.entries.first().map(|e| e.value.tower().clone()).unwrap_or_default()
    }

    pub fn conj(&self) -> Result<InvariantTuple> {
        let values: Result<Vec<Elem>> = self.entries.iter().map(|e| e.value.conj()).collect();
        Ok(InvariantTuple::with_values(self, values?))
    }

    pub fn lift(&self, t: &Tower) -> InvariantTuple {
        InvariantTuple::with_values(self, self.entries.iter().map(|e| e.value.lift(t)).collect())
    }

    pub fn lower_to(&self, t: &Tower) -> Option<InvariantTuple> {
        let v: Option<Vec<Elem>> = self.entries.iter().map(|e| e.value.lower_to(t)).collect();
        Some(InvariantTuple::with_values(self, v?))
    }

    /// Drops unused top tower levels.
    pub fn lower(&self) -> InvariantTuple {
        let mut t = self.clone();
        while t.tower().level() > 0 {
            match t.lower_to(&t.tower().base()) {
                Some(u) => t = u,
                None => break,
            }
        }
        t
    }

    /// value_w ↦ λ^w value_w.
    pub fn scaled(&self, lambda: &Elem) -> InvariantTuple {
        let v = self.entries.iter().map(|e| &e.value * &lambda.pow(e.weight as i64)).collect();
        InvariantTuple::with_values(self, v)
    }

    fn same_schema(&self, other: &InvariantTuple) -> bool {
        self.len() == other.len()
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a.label == b.label && a.weight == b.weight)
    }

    /// Nonzero positions with their weights, and the Euclid combination of those weights.
    fn euclid(&self) -> (Vec<usize>, i64, Vec<i64>) {
        let nz: Vec<usize> = (0..self.len()).filter(|&i| !self.entries[i].value.is_zero()).collect();
        let w: Vec<i64> = nz.iter().map(|&i| self.entries[i].weight as i64).collect();
        let (g, c) = ext_gcd_vec(&w);
        (nz, g, c)
    }
}

impl fmt::Display for InvariantTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}[{}] = {}", e.label, e.weight, e.value)?;
        }
        write!(f, ")")
    }
}

/// Equality of weighted projective points over the algebraic closure.
pub fn wp_equal(t1: &InvariantTuple, t2: &InvariantTuple) -> Result<bool> {
    if !t1.same_schema(t2) {
        return Err(Error::SchemaMismatch);
    }
    for (a, b) in t1.entries.iter().zip(&t2.entries) {
        if a.value.is_zero() != b.value.is_zero() {
            return Ok(false);
        }
    }
    let (nz, g, c) = t1.euclid();
    if nz.is_empty() {
        return Ok(true);
    }
    let rho: Vec<Elem> = nz.iter().map(|&i| &t2.entries[i].value / &t1.entries[i].value).collect();
    let mut lt = Elem::one(rho[0].tower());
    for (r, ci) in rho.iter().zip(&c) {
        lt = lt * r.pow(*ci);
    }
    for (k, &i) in nz.iter().enumerate() {
        let e = t1.entries[i].weight as i64 / g;
        if rho[k] != lt.pow(e) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A representative with values in the base field of the tuple's tower.
pub fn wp_normalize(t: &InvariantTuple) -> Result<InvariantTuple> {
    let tower = t.tower();
    if tower.level() > 0 && !wp_equal(t, &t.conj()?)? {
        return Err(Error::FieldOfModuliLarger);
    }
    let (nz, g, c) = t.euclid();
    if nz.is_empty() {
        return Ok(t.lower());
    }
    let pivot = nz.iter().find(|&&i| t.entries[i].weight as i64 == g);
    let m = match pivot {
        Some(&i) => t.entries[i].value.clone(),
        None => {
            let mut m = Elem::one(&tower);
            for (&i, ci) in nz.iter().zip(&c) {
                m = m * t.entries[i].value.pow(*ci);
            }
            m
        }
    };
    let v: Vec<Elem> = t.entries.iter().map(|e| &e.value / &m.pow(e.weight as i64 / g)).collect();
    let out = InvariantTuple::with_values(t, v);
    if tower.level() == 0 {
        return Ok(out);
    }
    out.lower_to(&tower.base())
        .map(|u| u.lower())
        .ok_or_else(|| Error::Internal(alloc::string::String::from("normalized tuple is not rational")))
}
