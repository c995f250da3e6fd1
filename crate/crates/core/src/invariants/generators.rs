//! Minimal generators of the torus-invariant monomial algebra for even m.
use alloc::vec;
use alloc::vec::Vec;

use super::diagonal::Monomial;

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// All minimal invariant monomials of degree ≤ max(m − 1, 2), by degree then reverse-lexicographic exponents.
pub fn invariant_algebra_generators(m: usize) -> Vec<Monomial> {
    assert!(m >= 2 && m.is_multiple_of(2), "m must be even and at least 2");
    let ell = (m / 2) as i64;
    let mut gens: Vec<Monomial> = Vec::new();
    for deg in 1..=(m as u32 - 1).max(2) {
        let mut found: Vec<Monomial> = Vec::new();
        let mut cur = vec![0u32; m + 1];
        enumerate(&mut cur, 0, deg, 0, ell, &mut found);
        found.retain(|mono| !gens.iter().any(|g| divides(g, mono)));
        found.sort_by(|a, b| b.iter().rev().cmp(a.iter().rev()));
        gens.extend(found);
    }
    gens
}

fn enumerate(cur: &mut Vec<u32>, i: usize, left: u32, wsum: i64, ell: i64, out: &mut Vec<Monomial>) {
    let m = cur.len() - 1;
    if i == m {
        cur[m] = left;
        if wsum + left as i64 * (m as i64 - ell) == 0 {
            out.push(cur.clone());
        }
        cur[m] = 0;
        return;
    }
    for e in 0..=left {
        cur[i] = e;
        enumerate(cur, i + 1, left - e, wsum + e as i64 * (i as i64 - ell), ell, out);
    }
    cur[i] = 0;
}
