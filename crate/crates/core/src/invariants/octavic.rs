//! The twenty dihedral invariants of a general octavic and two Shioda invariants.
use alloc::vec::Vec;

use crate::arith::{Elem, Rational};
use crate::binforms::BinaryForm;

/// Monomials as (index, exponent) pairs.
type Terms = &'static [&'static [(usize, u32)]];

/// Each invariant: name, weight, and its two monomials (or one, for degrees 1 and 2).
const TABLE: [(&str, u32, Terms); 20] = [
    ("i1", 1, &[&[(4, 1)]]),
    ("i2", 2, &[&[(0, 1), (8, 1)]]),
    ("j2", 2, &[&[(1, 1), (7, 1)]]),
    ("k2", 2, &[&[(2, 1), (6, 1)]]),
    ("l2", 2, &[&[(3, 1), (5, 1)]]),
    ("i3", 3, &[&[(0, 1), (5, 1), (7, 1)], &[(1, 1), (3, 1), (8, 1)]]),
    ("j3", 3, &[&[(0, 1), (6, 2)], &[(2, 2), (8, 1)]]),
    ("k3", 3, &[&[(1, 1), (5, 1), (6, 1)], &[(2, 1), (3, 1), (7, 1)]]),
    ("l3", 3, &[&[(2, 1), (5, 2)], &[(3, 2), (6, 1)]]),
    ("i4", 4, &[&[(0, 1), (5, 2), (6, 1)], &[(2, 1), (3, 2), (8, 1)]]),
    ("j4", 4, &[&[(0, 1), (3, 1), (6, 1), (7, 1)], &[(1, 1), (2, 1), (5, 1), (8, 1)]]),
    ("k4", 4, &[&[(0, 1), (2, 1), (7, 2)], &[(1, 2), (6, 1), (8, 1)]]),
    ("l4", 4, &[&[(1, 1), (5, 3)], &[(3, 3), (7, 1)]]),
    ("m4", 4, &[&[(1, 1), (3, 1), (6, 2)], &[(2, 2), (5, 1), (7, 1)]]),
    ("i5", 5, &[&[(0, 2), (6, 1), (7, 2)], &[(1, 2), (2, 1), (8, 2)]]),
    ("j5", 5, &[&[(0, 1), (5, 4)], &[(3, 4), (8, 1)]]),
    ("k5", 5, &[&[(0, 1), (3, 2), (7, 2)], &[(1, 2), (5, 2), (8, 1)]]),
    ("l5", 5, &[&[(1, 2), (6, 3)], &[(2, 3), (7, 2)]]),
    ("i6", 6, &[&[(0, 2), (3, 1), (7, 3)], &[(1, 3), (5, 1), (8, 2)]]),
    ("i7", 7, &[&[(0, 3), (7, 4)], &[(1, 4), (8, 3)]]),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctavicInvariant {
    pub name: &'static str,
    pub weight: u32,
    pub value: Elem,
}

/// a_i is the coefficient of x^i z^{8−i}.
pub fn octavic_dihedral(f: &BinaryForm) -> Vec<OctavicInvariant> {
    assert_eq!(f.degree(), 8, "octavic invariants need a degree-8 form");
    let a = f.coeffs();
    TABLE
        .iter()
        .map(|(name, weight, terms)| {
            let mut v = Elem::zero(f.tower());
            for term in terms.iter() {
                let mut p = Elem::one(f.tower());
                for &(i, e) in term.iter() {
                    p = p * a[i].pow(e as i64);
                }
                v = v + p;
            }
            OctavicInvariant { name, weight: *weight, value: v }
        })
        .collect()
}

fn get<'a>(inv: &'a [OctavicInvariant], name: &str) -> &'a Elem {
    &inv.iter().find(|x| x.name == name).expect("octavic invariant name").value
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The degree 2 and degree 3 Shioda invariants in terms of the table.
pub fn shioda_expr(inv: &[OctavicInvariant]) -> (Elem, Elem) {
    let [i1, i2, j2, k2, l2, i3, j3, k3, l3] =
        ["i1", "i2", "j2", "k2", "l2", "i3", "j3", "k3", "l3"].map(|n| get(inv, n).clone());
    let s2 = &i1 * &i1 * &r(1, 70) + &i2 * &r(2, 1) - &j2 * &r(1, 4) + &k2 * &r(1, 14) - &l2 * &r(1, 28);
    let s3 = &(&i1 * &i1) * &i1 * &r(9, 34300) + &(&i1 * &i2) * &r(3, 35) + &(&i1 * &j2) * &r(9, 560)
        - &(&i1 * &k2) * &r(33, 13720)
        - &(&i1 * &l2) * &r(27, 27440)
        - &i3 * &r(3, 56)
        + &j3 * &r(9, 392)
        - &k3 * &r(3, 784)
        + &l3 * &r(9, 5488);
    (s2, s3)
}
