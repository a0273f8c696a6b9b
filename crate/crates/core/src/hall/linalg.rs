//! Dense linear algebra over a prime field or over `Q`.
//!
//! Matrices are row-major `Vec<Vec<E>>`. A map `V → W` is stored as a
//! `dim W × dim V` matrix acting on column vectors; a subspace is stored as
//! the rows of a matrix in reduced row echelon form.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Matrix<E> = Vec<Vec<E>>;

/// Field operations; the field object carries any context (the prime).
pub trait Field: Clone + Send + Sync + Debug {
    type E: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn from_i64(&self, x: i64) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// Panics on zero.
    fn inv(&self, a: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
}

/// `F_p` with elements in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Panics unless `p` is prime.
    pub fn new(p: u32) -> Self {
        assert!(is_prime(p as u64), "{p} is not prime");
        PrimeField { p }
    }

    pub fn p(&self) -> u32 {
        self.p
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u32> {
    (2u32..).filter(|&n| is_prime(n as u64)).take(count).collect()
}

impl Field for PrimeField {
    type E = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero");
        // Fermat
        let (mut base, mut exp, mut acc) = (*a as u64, self.p as u64 - 2, 1u64);
        let p = self.p as u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type E = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Matrix<F::E> {
    vec![vec![f.zero(); cols]; rows]
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::E> {
    let mut m = zeros(f, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.one();
    }
    m
}

/// `a · b` where `a` is `r × n` and `b` is `n × c`; `n` is passed explicitly
/// so that empty shapes work.
pub fn mat_mul<F: Field>(f: &F, a: &Matrix<F::E>, b: &Matrix<F::E>, c: usize) -> Matrix<F::E> {
    a.iter()
        .map(|row| {
            (0..c)
                .map(|j| {
                    row.iter()
                        .zip(b.iter())
                        .fold(f.zero(), |acc, (x, brow)| f.add(&acc, &f.mul(x, &brow[j])))
                })
                .collect()
        })
        .collect()
}

/// `a · x` for a column vector `x`.
pub fn apply<F: Field>(f: &F, a: &Matrix<F::E>, x: &[F::E]) -> Vec<F::E> {
    a.iter()
        .map(|row| row.iter().zip(x).fold(f.zero(), |acc, (m, y)| f.add(&acc, &f.mul(m, y))))
        .collect()
}

pub fn transpose<E: Clone>(m: &Matrix<E>, cols: usize) -> Matrix<E> {
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn is_zero_matrix<F: Field>(f: &F, m: &Matrix<F::E>) -> bool {
    m.iter().flatten().all(|x| f.is_zero(x))
}

/// Brings `m` to reduced row echelon form in place, drops zero rows and
/// returns the pivot columns.
pub fn rref<F: Field>(f: &F, m: &mut Matrix<F::E>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(k) = (r..rows).find(|&k| !f.is_zero(&m[k][c])) else {
            continue;
        };
        m.swap(r, k);
        let inv = f.inv(&m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for k in 0..rows {
            if k != r && !f.is_zero(&m[k][c]) {
                let factor = m[k][c].clone();
                for j in 0..cols {
                    let t = f.mul(&factor, &m[r][j]);
                    m[k][j] = f.sub(&m[k][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::E>) -> usize {
    let mut m = m.clone();
    rref(f, &mut m).len()
}

/// Reduces `w` against a subspace given in RREF with its pivots; the result
/// is zero iff `w` lies in the subspace.
pub fn reduce<F: Field>(f: &F, basis: &Matrix<F::E>, pivots: &[usize], w: &mut [F::E]) {
    for (row, &c) in basis.iter().zip(pivots) {
        if !f.is_zero(&w[c]) {
            let factor = w[c].clone();
            for (x, y) in w.iter_mut().zip(row) {
                *x = f.sub(x, &f.mul(&factor, y));
            }
        }
    }
}

/// A basis of `{x : m x = 0}` where `m` has `cols` columns.
pub fn nullspace<F: Field>(f: &F, m: &Matrix<F::E>, cols: usize) -> Matrix<F::E> {
    let mut r = m.clone();
    let pivots = rref(f, &mut r);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![f.zero(); cols];
            x[fc] = f.one();
            for (row, &pc) in r.iter().zip(&pivots) {
                x[pc] = f.sub(&f.zero(), &row[fc]);
            }
            x
        })
        .collect()
}

/// Some `x` with `a x = b`, or `None` if the system is inconsistent.
pub fn solve<F: Field>(f: &F, a: &Matrix<F::E>, b: &[F::E], cols: usize) -> Option<Vec<F::E>> {
    let mut aug: Matrix<F::E> = a
        .iter()
        .zip(b)
        .map(|(row, y)| {
            let mut r = row.clone();
            r.push(y.clone());
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![f.zero(); cols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[cols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, if it exists.
pub fn inverse<F: Field>(f: &F, m: &Matrix<F::E>) -> Option<Matrix<F::E>> {
    let n = m.len();
    let mut aug: Matrix<F::E> = m
        .iter()
        .zip(identity(f, n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Number of `k`-dimensional subspaces of `F_p^d`, and an indexed
/// enumeration of them in RREF.
#[derive(Debug, Clone)]
pub struct Grassmannian {
    f: PrimeField,
    d: usize,
    k: usize,
    /// `(pivot columns, free positions, number of subspaces)` per cell
    cells: Vec<(Vec<usize>, Vec<(usize, usize)>, u64)>,
    total: u64,
}

impl Grassmannian {
    pub fn new(f: PrimeField, d: usize, k: usize) -> Self {
        let mut cells = Vec::new();
        let p = f.p() as u64;
        for piv in combinations(d, k) {
            let free: Vec<(usize, usize)> = piv
                .iter()
                .enumerate()
                .flat_map(|(r, &c)| ((c + 1)..d).filter(|j| !piv.contains(j)).map(move |j| (r, j)))
                .collect();
            let n = p.pow(free.len() as u32);
            cells.push((piv, free, n));
        }
        let total = cells.iter().map(|c| c.2).sum();
        Grassmannian { f, d, k, cells, total }
    }

    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// The `idx`-th subspace as RREF rows, with its pivots.
    pub fn get(&self, mut idx: u64) -> (Matrix<u32>, &[usize]) {
        let p = self.f.p() as u64;
        for (piv, free, n) in &self.cells {
            if idx >= *n {
                idx -= n;
                continue;
            }
            let mut m = vec![vec![0u32; self.d]; self.k];
            for (r, &c) in piv.iter().enumerate() {
                m[r][c] = 1;
            }
            for &(r, j) in free {
                m[r][j] = (idx % p) as u32;
                idx /= p;
            }
            return (m, piv);
        }
        panic!("subspace index out of range");
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}
