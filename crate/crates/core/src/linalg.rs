//! Dense exact linear algebra over prime fields.
//!
//! Residues are stored as `u32` in `0..l`; row operations for the small
//! primes used in practice are monomorphized so the reduction mod `l`
//! compiles to multiply-shift sequences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::is_prime;

#[inline]
pub fn add_mod(a: u32, b: u32, l: u32) -> u32 {
    let s = a + b;
    if s >= l {
        s - l
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u32, b: u32, l: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + l - b
    }
}

#[inline]
pub fn mul_mod(a: u32, b: u32, l: u32) -> u32 {
    ((a as u64 * b as u64) % l as u64) as u32
}

#[inline]
pub fn neg_mod(a: u32, l: u32) -> u32 {
    if a == 0 {
        0
    } else {
        l - a
    }
}

pub fn inv_mod(a: u32, l: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(l));
    // Fermat
    let mut base = a as u64 % l as u64;
    let mut e = l as u64 - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % l as u64;
        }
        base = base * base % l as u64;
        e >>= 1;
    }
    acc as u32
}

pub fn check_prime(l: u32) -> Result<()> {
    if is_prime(l as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(l as u64))
    }
}

#[inline]
fn axpy_const<const L: u32>(dst: &mut [u32], src: &[u32], c: u32) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = (*d + c * s) % L;
    }
}

/// `dst += c * src (mod l)`.
pub fn axpy(dst: &mut [u32], src: &[u32], c: u32, l: u32) {
    if c == 0 {
        return;
    }
    match l {
        2 => {
            for (d, &s) in dst.iter_mut().zip(src) {
                *d ^= s;
            }
        }
        3 => axpy_const::<3>(dst, src, c),
        5 => axpy_const::<5>(dst, src, c),
        7 => axpy_const::<7>(dst, src, c),
        11 => axpy_const::<11>(dst, src, c),
        _ => {
            for (d, &s) in dst.iter_mut().zip(src) {
                *d = ((*d as u64 + c as u64 * s as u64) % l as u64) as u32;
            }
        }
    }
}

fn scale(row: &mut [u32], c: u32, l: u32) {
    for x in row {
        *x = mul_mod(*x, c, l);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlMatrix {
    l: u32,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl FlMatrix {
    pub fn zeros(l: u32, rows: usize, cols: usize) -> FlMatrix {
        FlMatrix {
            l,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(l: u32, n: usize) -> FlMatrix {
        let mut m = Self::zeros(l, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1 % l;
        }
        m
    }

    /// Entries are reduced mod `l` (negative inputs allowed).
    pub fn from_rows(l: u32, rows: &[Vec<i64>]) -> Result<FlMatrix> {
        check_prime(l)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged matrix rows".into()));
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&x| x.rem_euclid(l as i64) as u32)
            .collect();
        Ok(FlMatrix {
            l,
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn with_shape(l: u32, rows: usize, cols: usize, entries: Vec<u32>) -> Result<FlMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(FlMatrix {
            l,
            rows,
            cols,
            entries: entries.into_iter().map(|x| x % l).collect(),
        })
    }

    /// Rows given as residue vectors.
    pub fn from_vectors(l: u32, cols: usize, vectors: &[Vec<u32>]) -> Result<FlMatrix> {
        let mut entries = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            if v.len() != cols {
                return Err(Error::Shape("vector length mismatch".into()));
            }
            entries.extend(v.iter().map(|&x| x % l));
        }
        Ok(FlMatrix {
            l,
            rows: vectors.len(),
            cols,
            entries,
        })
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.entries[r * self.cols + c] = v % self.l;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> FlMatrix {
        let mut t = Self::zeros(self.l, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &FlMatrix) -> Result<FlMatrix> {
        if self.cols != other.rows || self.l != other.l {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.l, self.rows, other.cols);
        for r in 0..self.rows {
            let dst = &mut out.entries[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let c = self.get(r, k);
                if c != 0 {
                    axpy(dst, other.row(k), c, self.l);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        let l = self.l as u64;
        Ok((0..self.rows)
            .map(|r| {
                let s: u64 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (s % l) as u32
            })
            .collect())
    }

    pub fn add(&self, other: &FlMatrix) -> Result<FlMatrix> {
        if self.rows != other.rows || self.cols != other.cols || self.l != other.l {
            return Err(Error::Shape("cannot add matrices of different shapes".into()));
        }
        let mut out = self.clone();
        axpy(&mut out.entries, &other.entries, 1, self.l);
        Ok(out)
    }

    pub fn sub(&self, other: &FlMatrix) -> Result<FlMatrix> {
        self.add(&other.scaled(self.l - 1))
    }

    pub fn scaled(&self, c: u32) -> FlMatrix {
        let mut out = self.clone();
        scale(&mut out.entries, c % self.l, self.l);
        out
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let l = self.l;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.entries[i * cols + c] != 0) else {
                continue;
            };
            if p != r {
                for k in c..cols {
                    self.entries.swap(p * cols + k, r * cols + k);
                }
            }
            let inv = inv_mod(self.entries[r * cols + c], l);
            scale(&mut self.entries[r * cols + c..(r + 1) * cols], inv, l);
            let pivot_row: Vec<u32> = self.entries[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.entries[i * cols + c];
                if f != 0 {
                    axpy(
                        &mut self.entries[i * cols + c..(i + 1) * cols],
                        &pivot_row,
                        l - f,
                        l,
                    );
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    pub fn determinant_is_nonzero(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<FlMatrix> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.l, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.entries[r * 2 * n + c] = self.get(r, c);
            }
            aug.entries[r * 2 * n + n + r] = 1 % self.l;
        }
        let pivots = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut out = Self::zeros(self.l, n, n);
        for r in 0..n {
            for c in 0..n {
                out.entries[r * n + c] = aug.entries[r * 2 * n + n + c];
            }
        }
        Ok(out)
    }
}

/// `{x : M x = 0}`.
pub fn kernel(m: &FlMatrix) -> Subspace {
    let mut red = m.clone();
    let pivots = red.row_reduce();
    let n = m.cols;
    let l = m.l;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; n];
        v[f] = 1 % l;
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = neg_mod(red.get(r, f), l);
        }
        basis.push(v);
    }
    Subspace::span(l, n, &basis)
}

pub fn rank(m: &FlMatrix) -> usize {
    m.rank()
}

/// Some `x` with `M x = v`, if one exists.
pub fn solve(m: &FlMatrix, v: &[u32]) -> Result<Option<Vec<u32>>> {
    if v.len() != m.rows {
        return Err(Error::Shape(format!(
            "right-hand side of length {} for {} rows",
            v.len(),
            m.rows
        )));
    }
    let n = m.cols;
    let mut aug = FlMatrix::zeros(m.l, m.rows, n + 1);
    for r in 0..m.rows {
        for c in 0..n {
            aug.entries[r * (n + 1) + c] = m.get(r, c);
        }
        aug.entries[r * (n + 1) + n] = v[r] % m.l;
    }
    let pivots = aug.row_reduce();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![0u32; n];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug.get(r, n);
    }
    Ok(Some(x))
}

/// A subspace of `F_l^n` held by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    l: u32,
    ambient_dim: usize,
    basis: FlMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(l: u32, ambient_dim: usize) -> Subspace {
        Subspace {
            l,
            ambient_dim,
            basis: FlMatrix::zeros(l, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(l: u32, ambient_dim: usize) -> Subspace {
        Subspace {
            l,
            ambient_dim,
            basis: FlMatrix::identity(l, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span(l: u32, ambient_dim: usize, vectors: &[Vec<u32>]) -> Subspace {
        let mut m = FlMatrix::from_vectors(l, ambient_dim, vectors)
            .expect("span vectors must have the ambient length");
        let pivots = m.row_reduce();
        let rank = pivots.len();
        m.entries.truncate(rank * ambient_dim);
        m.rows = rank;
        Subspace {
            l,
            ambient_dim,
            basis: m,
            pivots,
        }
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &FlMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the echelon basis; zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c != 0 {
                axpy(&mut w, self.basis.row(r), self.l - c, self.l);
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }

    pub fn combination(&self, coords: &[u32]) -> Vec<u32> {
        let mut v = vec![0u32; self.ambient_dim];
        for (r, &c) in coords.iter().enumerate() {
            axpy(&mut v, self.basis.row(r), c, self.l);
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.l, self.ambient_dim, &vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(FlMatrix::zeros(5, 3, 4).rank(), 0);
        let m = FlMatrix::from_rows(2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(rank(&m), 1);
        let m = FlMatrix::from_rows(3, &[vec![1, 1], vec![1, -1]]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&FlMatrix::identity(7, 4)).dim(), 0);
        let m = FlMatrix::from_rows(2, &[vec![1, 1], vec![1, 1]]).unwrap();
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[1, 1]));
        let m = FlMatrix::from_rows(5, &[vec![1, 2, 3]]).unwrap();
        let k = kernel(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert_eq!(m.apply(&v).unwrap(), vec![0]);
        }
    }

    #[test]
    fn solve_and_inverse() {
        let m = FlMatrix::from_rows(3, &[vec![1, 1], vec![0, 1]]).unwrap();
        let x = solve(&m, &[2, 1]).unwrap().unwrap();
        assert_eq!(m.apply(&x).unwrap(), vec![2, 1]);
        let z = FlMatrix::from_rows(2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(solve(&z, &[1, 0]).unwrap(), None);
        assert_eq!(z.inverse(), Err(Error::Singular));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), FlMatrix::identity(3, 2));
        assert!(solve(&m, &[1]).is_err());
    }

    #[test]
    fn shape_errors() {
        let a = FlMatrix::zeros(2, 2, 3);
        assert!(a.mul(&a).is_err());
        assert!(a.apply(&[1, 0]).is_err());
        assert!(FlMatrix::from_rows(4, &[vec![1]]).is_err());
    }

    #[test]
    fn subspace_coordinates() {
        let s = Subspace::span(3, 3, &[vec![1, 2, 0], vec![2, 1, 1]]);
        assert_eq!(s.dim(), 2);
        let v = vec![0, 0, 1];
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.combination(&c), v);
        assert_eq!(s.coordinates(&[1, 0, 0]), None);
    }

    #[test]
    fn specialized_axpy_matches_generic() {
        for l in [2u32, 3, 5, 7, 11, 13] {
            let src: Vec<u32> = (0..20).map(|i| (i * 7 + 3) % l).collect();
            for c in 0..l {
                let mut fast: Vec<u32> = (0..20).map(|i| (i * 5 + 1) % l).collect();
                let slow: Vec<u32> = fast
                    .iter()
                    .zip(&src)
                    .map(|(&d, &s)| (d + c * s) % l)
                    .collect();
                axpy(&mut fast, &src, c, l);
                assert_eq!(fast, slow, "l={l} c={c}");
            }
        }
    }
}
