//! The single-row kernel lattice: saturated kernel, nonnegative basis and complement.
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Index set s_1 > … > s_#S inside 0..=m.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SSet {
    pub indices: Vec<usize>,
    pub m: usize,
}

impl SSet {
    pub fn new(mut indices: Vec<usize>, m: usize) -> SSet {
        indices.sort_unstable_by(|a, b| b.cmp(a));
        indices.dedup();
        assert!(indices.iter().all(|&i| i <= m), "index outside 0..=m");
        SSet { indices, m }
    }

    pub fn ell(&self) -> usize {
        if self.m.is_multiple_of(2) {
            self.m / 2
        } else {
            self.m.div_ceil(2)
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeData {
    pub row: Vec<i64>,
    pub basis: Vec<Vec<i64>>,
    pub complement: Vec<i64>,
}

fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// Even m: s − ℓ. Odd m: 2(s − ℓ) + 1.
pub fn ms_row(s: &SSet) -> Vec<i64> {
    let ell = s.ell() as i64;
    s.indices
        .iter()
        .map(|&i| {
            let d = i as i64 - ell;
            if s.m.is_multiple_of(2) {
                d
            } else {
                2 * d + 1
            }
        })
        .collect()
}

fn mixed(row: &[i64]) -> bool {
    row.iter().any(|&x| x > 0) && row.iter().any(|&x| x < 0)
}

/// Trades m for 0 (or 0 for m) so that the row changes sign. `nonzero(i)` reports a_i ≠ 0.
pub fn adjust_s(s: &SSet, nonzero: impl Fn(usize) -> bool) -> Result<SSet> {
    if s.len() < 2 || mixed(&ms_row(s)) {
        return Ok(s.clone());
    }
    let mut idx = s.indices.clone();
    if let Some(p) = idx.iter().position(|&i| i == s.m) {
        if !nonzero(0) || idx.contains(&0) {
            return Err(Error::Lattice(String::from("cannot mix signs")));
        }
        idx[p] = 0;
    } else if let Some(p) = idx.iter().position(|&i| i == 0) {
        if !nonzero(s.m) {
            return Err(Error::Lattice(String::from("cannot mix signs")));
        }
        idx[p] = s.m;
    } else {
        return Err(Error::Lattice(String::from("cannot mix signs")));
    }
    let t = SSet::new(idx, s.m);
    if !mixed(&ms_row(&t)) {
        return Err(Error::Lattice(String::from("cannot mix signs")));
    }
    Ok(t)
}

/// Column reduction r·U = (g, 0, …, 0) with U unimodular; returns (g, U) with U as columns.
fn column_reduce(row: &[i128]) -> (i128, Vec<Vec<i128>>, Vec<Vec<i128>>) {
    let k = row.len();
    let mut r = row.to_vec();
    let mut cols: Vec<Vec<i128>> = (0..k).map(|i| unit(k, i)).collect();
    // rows of U⁻¹, kept in step with the column operations
    let mut inv_rows: Vec<Vec<i128>> = (0..k).map(|i| unit(k, i)).collect();
    loop {
        let nz: Vec<usize> = (0..k).filter(|&i| r[i] != 0).collect();
        if nz.len() <= 1 {
            break;
        }
        let p = *nz.iter().min_by_key(|&&i| r[i].abs()).expect("nonempty");
        for &j in &nz {
            if j == p {
                continue;
            }
            let q = r[j].div_euclid(r[p]);
            r[j] -= q * r[p];
            for t in 0..k {
                let v = cols[p][t];
                cols[j][t] -= q * v;
            }
            for t in 0..k {
                let v = inv_rows[j][t];
                inv_rows[p][t] += q * v;
            }
        }
    }
    let p = (0..k).find(|&i| r[i] != 0).unwrap_or(0);
    cols.swap(0, p);
    inv_rows.swap(0, p);
    r.swap(0, p);
    if r[0] < 0 {
        r[0] = -r[0];
        cols[0].iter_mut().for_each(|x| *x = -*x);
        inv_rows[0].iter_mut().for_each(|x| *x = -*x);
    }
    (r[0], cols, inv_rows)
}

fn unit(k: usize, i: usize) -> Vec<i128> {
    let mut v = vec![0i128; k];
    v[i] = 1;
    v
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A strictly positive kernel vector, primitive.
fn positive_kernel_vector(row: &[i128]) -> Vec<i128> {
    let k = row.len();
    let mut v = vec![0i128; k];
    for i in 0..k {
        if row[i] == 0 {
            v[i] += 1;
            continue;
        }
        let j = (0..k).find(|&j| row[j] != 0 && (row[j] > 0) != (row[i] > 0)).expect("mixed signs");
        v[i] += row[j].abs();
        v[j] += row[i].abs();
    }
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    v.iter().map(|x| x / g).collect()
}

/// Smallest t ≥ 0 with x + t·v ≥ 0 componentwise, for v > 0.
fn lift_nonnegative(x: &[i128], v: &[i128]) -> Vec<i128> {
    let mut t = 0i128;
    for (a, b) in x.iter().zip(v) {
        if *a < 0 {
            t = t.max((-a + b - 1) / b);
        }
    }
    x.iter().zip(v).map(|(a, b)| a + t * b).collect()
}

/// Saturated basis of ker(row) ∩ Z^k with every entry nonnegative.
pub fn kernel_positive_basis(row: &[i64]) -> Result<Vec<Vec<i64>>> {
    Ok(lattice_data(row)?.basis)
}

/// The full data: nonnegative kernel basis and a nonnegative complement.
pub fn lattice_data(row: &[i64]) -> Result<LatticeData> {
    if !mixed(row) {
        return Err(Error::Lattice(String::from("row needs entries of both signs")));
    }
    let r: Vec<i128> = row.iter().map(|&x| x as i128).collect();
    let k = r.len();
    let (_g, cols, inv_rows) = column_reduce(&r);
    let kernel: Vec<Vec<i128>> = cols[1..].to_vec();
    let v1 = positive_kernel_vector(&r);
    // coordinates of v1 in the kernel basis: U⁻¹ v1 restricted to positions 1..
    let c: Vec<i128> = inv_rows[1..].iter().map(|row| dot(row, &v1)).collect();
    // V unimodular with first column c: V = W⁻ᵀ where cᵀ W = (1, 0, …)
    let (gc, _w, winv_rows) = column_reduce(&c);
    if gc != 1 {
        return Err(Error::Internal(String::from("positive kernel vector not primitive in kernel")));
    }
    let kk = kernel.len();
    let mut basis: Vec<Vec<i128>> = Vec::with_capacity(kk);
    for j in 0..kk {
        // column j of W⁻ᵀ is row j of W⁻¹
        let coeffs = &winv_rows[j];
        let mut b = vec![0i128; k];
        for (t, kv) in kernel.iter().enumerate() {
            for s in 0..k {
                b[s] += coeffs[t] * kv[s];
            }
        }
        basis.push(b);
    }
    if basis[0] != v1 && basis[0].iter().map(|x| -x).collect::<Vec<_>>() != v1 {
        return Err(Error::Internal(String::from("basis completion lost v1")));
    }
    basis[0] = v1.clone();
    for b in basis.iter_mut().skip(1) {
        *b = lift_nonnegative(b, &v1);
    }
    let w = lift_nonnegative(&cols[0], &v1);
    let to64 = |v: &Vec<i128>| -> Result<Vec<i64>> { v.iter().map(|&x| narrow(x)).collect() };
    let data =
        LatticeData { row: row.to_vec(), basis: basis.iter().map(to64).collect::<Result<_>>()?, complement: to64(&w)? };
    debug_assert!(data.basis.iter().all(|b| dot64(b, row) == 0));
    Ok(data)
}

fn dot64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A nonnegative w completing the kernel basis to a basis of Z^k.
pub fn complement(basis: &[Vec<i64>], row: &[i64]) -> Result<Vec<i64>> {
    let data = lattice_data(row)?;
    if hnf(basis)? != hnf(&data.basis)? {
        return Err(Error::Lattice(String::from("basis does not span the kernel")));
    }
    let mut all: Vec<Vec<i64>> = basis.to_vec();
    all.push(data.complement.clone());
    if det(&all).abs() == BigInt::one() {
        return Ok(data.complement);
    }
    Err(Error::Internal(String::from("complement not unimodular")))
}

/// Determinant of a square integer matrix (rows), exactly.
pub fn det(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut a: Vec<Vec<Rational>> =
        rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()).collect();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        let piv = a[c][c].clone();
        d *= &piv;
        for i in c + 1..n {
            let f = &a[i][c] / &piv;
            for j in c..n {
                let v = &a[c][j] * &f;
                a[i][j] -= v;
            }
        }
    }
    d.to_integer()
}

/// Integer coordinates of `target` in the basis given by `vectors` (must be unimodular).
pub fn express(target: &[i64], vectors: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = vectors.len();
    if n != target.len() {
        return Err(Error::Lattice(String::from("express needs a square system")));
    }
    // solve Σ x_j vectors[j] = target
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut r: Vec<Rational> = (0..n).map(|j| Rational::from_integer(BigInt::from(vectors[j][i]))).collect();
            r.push(Rational::from_integer(BigInt::from(target[i])));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or_else(|| Error::Lattice(String::from("singular basis")))?;
        a.swap(p, c);
        let piv = a[c][c].clone();
        for j in c..=n {
            a[c][j] = &a[c][j] / &piv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..=n {
                    let v = &a[c][j] * &f;
                    a[i][j] -= v;
                }
            }
        }
    }
    a.iter()
        .map(|r| {
            let x = &r[n];
            if !x.is_integer() {
                return Err(Error::Lattice(String::from("target not in the lattice")));
            }
            x.to_integer().to_i64().ok_or(Error::Overflow)
        })
        .collect()
}

/// Row Hermite normal form of the lattice spanned by `vectors` (zero rows dropped).
pub fn hnf(vectors: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let k = vectors[0].len();
    let mut rows: Vec<Vec<i128>> = vectors.iter().map(|v| v.iter().map(|&x| x as i128).collect()).collect();
    let mut out: Vec<Vec<i128>> = Vec::new();
    for c in 0..k {
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][c] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| rows[i][c].abs()).expect("nonempty");
            for &j in &nz {
                if j != p {
                    let q = rows[j][c].div_euclid(rows[p][c]);
                    for t in 0..k {
                        let v = rows[p][t];
                        rows[j][t] -= q * v;
                    }
                }
            }
        }
        if let Some(p) = (0..rows.len()).find(|&i| rows[i][c] != 0) {
            let mut r = rows.remove(p);
            if r[c] < 0 {
                r.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(r);
        }
    }
    for i in 0..out.len() {
        let c = (0..k).find(|&c| out[i][c] != 0).expect("pivot");
        for j in 0..i {
            let q = out[j][c].div_euclid(out[i][c]);
            if q != 0 {
                for t in 0..k {
                    let v = out[i][t];
                    out[j][t] -= q * v;
                }
            }
        }
    }
    out.iter().map(|r| r.iter().map(|&x| narrow(x)).collect()).collect()
}
