//! Hall numbers over `F_p` and Hall polynomials.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hall::linalg::{self, first_primes, is_prime, Grassmannian, Matrix, PrimeField};
use crate::hall::quiver::{build_rep, RankTable};
use crate::multiseg::{DimVector, Multisegment, Residue};
use crate::par::Exec;

/// Largest total dimension accepted by the finite-field enumeration.
pub const MAX_TOTAL_DIM: u32 = 6;

/// Number of submodules `U ⊂ M_ψ` over `F_p` with `U ≅ M_{φ2}` and
/// `M_ψ / U ≅ M_{φ1}`.
pub fn hall_number(psi: &Multisegment, phi1: &Multisegment, phi2: &Multisegment, p: u32) -> Result<u64> {
    hall_number_with(Exec::default(), psi, phi1, phi2, p)
}

pub fn hall_number_with(exec: Exec, psi: &Multisegment, phi1: &Multisegment, phi2: &Multisegment, p: u32) -> Result<u64> {
    if !is_prime(p as u64) {
        return Err(Error::Parse(format!("{p} as a prime")));
    }
    let n = psi.size();
    if n > MAX_TOTAL_DIM {
        return Err(Error::DimensionLimit(n as usize, MAX_TOTAL_DIM as usize));
    }
    if psi.e() != phi1.e() || psi.e() != phi2.e() || psi.weight() != phi1.weight().add(&phi2.weight()) {
        return Ok(0);
    }
    Ok(SubmoduleCount::new(psi, phi1, phi2, PrimeField::new(p)).run(exec))
}

struct SubmoduleCount {
    f: PrimeField,
    e: usize,
    n: u32,
    d: Vec<usize>,
    k: Vec<usize>,
    arrows: Vec<Matrix<u32>>,
    /// `images[i][t]`: rows are the images of the standard basis of `V_i`
    /// under `t` arrows, as vectors of `V_{i+t}`
    images: Vec<Vec<Matrix<u32>>>,
    /// `comps[i][t]`: the composite `V_i → V_{i+t}`
    comps: Vec<Vec<Matrix<u32>>>,
    grass: Vec<Grassmannian>,
    sub: RankTable,
    quot: RankTable,
    order: Vec<usize>,
}

impl SubmoduleCount {
    fn new(psi: &Multisegment, phi1: &Multisegment, phi2: &Multisegment, f: PrimeField) -> Self {
        let rep = build_rep(psi, f);
        let e = psi.e() as usize;
        let n = psi.size();
        let d: Vec<usize> = (0..e).map(|i| rep.dim(i)).collect();
        let k: Vec<usize> = phi2.weight().0.iter().map(|&x| x as usize).collect();
        let comps: Vec<Vec<Matrix<u32>>> = (0..e).map(|i| (0..=n).map(|t| rep.composite(i, t)).collect()).collect();
        let images = (0..e)
            .map(|i| {
                (0..=n)
                    .map(|t| linalg::transpose(&comps[i][t as usize], d[i]))
                    .collect()
            })
            .collect();
        let grass: Vec<Grassmannian> = (0..e).map(|i| Grassmannian::new(f, d[i], k[i])).collect();
        // the grade with the most subspaces goes first and is split across threads
        let outer = (0..e).max_by_key(|&i| (grass[i].len(), std::cmp::Reverse(i))).unwrap();
        let order = (0..e).map(|t| (outer + t) % e).collect();
        SubmoduleCount {
            f,
            e,
            n,
            d,
            k,
            arrows: (0..e).map(|i| rep.arrow(i).clone()).collect(),
            images,
            comps,
            grass,
            sub: RankTable::of_multisegment(phi2, n),
            quot: RankTable::of_multisegment(phi1, n),
            order,
        }
    }

    fn run(&self, exec: Exec) -> u64 {
        let outer = self.order[0];
        let total = self.grass[outer].len();
        let chunks = 64u64.min(total.max(1));
        let ranges: Vec<(u64, u64)> = (0..chunks)
            .map(|c| (total * c / chunks, total * (c + 1) / chunks))
            .collect();
        exec.sum(&ranges, |&(lo, hi)| {
            let mut chosen: Vec<Option<(Matrix<u32>, Vec<usize>)>> = vec![None; self.e];
            let mut count = 0;
            for idx in lo..hi {
                let (m, piv) = self.grass[outer].get(idx);
                chosen[outer] = Some((m, piv.to_vec()));
                count += self.descend(1, &mut chosen);
            }
            count
        })
    }

    fn descend(&self, depth: usize, chosen: &mut Vec<Option<(Matrix<u32>, Vec<usize>)>>) -> u64 {
        if depth == self.e {
            let prev = self.order[self.e - 1];
            if !self.stable(prev, chosen) {
                return 0;
            }
            return self.matches(chosen) as u64;
        }
        let g = self.order[depth];
        let prev = self.order[depth - 1];
        let mut count = 0;
        for idx in 0..self.grass[g].len() {
            let (m, piv) = self.grass[g].get(idx);
            chosen[g] = Some((m, piv.to_vec()));
            if self.stable(prev, chosen) {
                count += self.descend(depth + 1, chosen);
            }
        }
        chosen[g] = None;
        count
    }

    /// `A_i U_i ⊂ U_{i+1}`
    fn stable(&self, i: usize, chosen: &[Option<(Matrix<u32>, Vec<usize>)>]) -> bool {
        let j = (i + 1) % self.e;
        let (ui, _) = chosen[i].as_ref().unwrap();
        let (uj, pj) = chosen[j].as_ref().unwrap();
        ui.iter().all(|u| {
            let mut w = linalg::apply(&self.f, &self.arrows[i], u);
            linalg::reduce(&self.f, uj, pj, &mut w);
            w.iter().all(|&x| x == 0)
        })
    }

    fn matches(&self, chosen: &[Option<(Matrix<u32>, Vec<usize>)>]) -> bool {
        for i in 0..self.e {
            let (ui, _) = chosen[i].as_ref().unwrap();
            for t in 1..=self.n {
                let j = (i + t as usize) % self.e;
                let comp = &self.comps[i][t as usize];
                let img: Matrix<u32> = ui.iter().map(|u| linalg::apply(&self.f, comp, u)).collect();
                let r_sub = if img.is_empty() { 0 } else { linalg::rank(&self.f, &img) as u32 };
                if r_sub != self.sub.get(i, t) {
                    return false;
                }
                let (uj, _) = chosen[j].as_ref().unwrap();
                let mut stacked: Matrix<u32> = self.images[i][t as usize].clone();
                stacked.extend(uj.iter().cloned());
                let r_all = if stacked.is_empty() || self.d[j] == 0 { 0 } else { linalg::rank(&self.f, &stacked) };
                if (r_all - self.k[j]) as u32 != self.quot.get(i, t) {
                    return false;
                }
            }
        }
        true
    }
}

/// A polynomial in `q` with integer coefficients, ascending powers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HallPolynomial {
    coeffs: Vec<BigIntJson>,
}

/// `BigInt` serialized as a JSON number.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
struct BigIntJson(BigInt);

impl Serialize for BigIntJson {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        match self.0.to_i64() {
            Some(x) => ser.serialize_i64(x),
            None => Err(serde::ser::Error::custom("coefficient does not fit in 64 bits")),
        }
    }
}

impl<'de> Deserialize<'de> for BigIntJson {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        Ok(BigIntJson(BigInt::from(i64::deserialize(de)?)))
    }
}

impl HallPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = HallPolynomial { coeffs: coeffs.into_iter().map(BigIntJson).collect() };
        while p.coeffs.last().is_some_and(|c| c.0.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    pub fn zero() -> Self {
        HallPolynomial::default()
    }

    pub fn one() -> Self {
        HallPolynomial::new(vec![BigInt::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        HallPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.0.clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: u64) -> BigInt {
        let q = BigInt::from(q);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &q + &c.0)
    }

    pub fn mul(&self, o: &HallPolynomial) -> HallPolynomial {
        if self.is_zero() || o.is_zero() {
            return HallPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            for (b, y) in o.coeffs.iter().enumerate() {
                out[a + b] += &x.0 * &y.0;
            }
        }
        HallPolynomial::new(out)
    }

    /// The Gaussian binomial `[d choose k]_q`.
    pub fn gaussian_binomial(d: u32, k: u32) -> HallPolynomial {
        if k > d {
            return HallPolynomial::zero();
        }
        // [d k] = [d-1 k-1] + q^k [d-1 k]
        let mut row = vec![HallPolynomial::one()];
        for n in 1..=d {
            let mut next = Vec::with_capacity(n as usize + 1);
            for j in 0..=n {
                let left = if j > 0 { row[j as usize - 1].clone() } else { HallPolynomial::zero() };
                let right = if j < n { row[j as usize].shift(j as usize) } else { HallPolynomial::zero() };
                next.push(left.add(&right));
            }
            row = next;
        }
        row[k as usize].clone()
    }

    fn shift(&self, k: usize) -> HallPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs());
        HallPolynomial::new(c)
    }

    fn add(&self, o: &HallPolynomial) -> HallPolynomial {
        let len = self.coeffs.len().max(o.coeffs.len());
        let get = |p: &HallPolynomial, i: usize| p.coeffs.get(i).map(|c| c.0.clone()).unwrap_or_default();
        HallPolynomial::new((0..len).map(|i| get(self, i) + get(o, i)).collect())
    }
}

impl fmt::Display for HallPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            let c = &c.0;
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "q".into(),
                k => format!("q^{k}"),
            };
            parts.push(if var.is_empty() {
                c.to_string()
            } else if c.is_one() {
                var
            } else {
                format!("{c}{var}")
            });
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// Interpolation settings.
#[derive(Debug, Clone, Copy)]
pub struct HallConfig {
    /// Number of primes (from 2 upwards) interpolation may use.
    pub prime_budget: usize,
    pub exec: Exec,
}

impl Default for HallConfig {
    fn default() -> Self {
        HallConfig { prime_budget: 12, exec: Exec::default() }
    }
}

type Key = (Multisegment, Multisegment, Multisegment);

fn memo() -> &'static Mutex<HashMap<Key, HallPolynomial>> {
    static MEMO: OnceLock<Mutex<HashMap<Key, HallPolynomial>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Seeds the in-process memo, e.g. from an on-disk cache.
pub fn memo_insert(psi: &Multisegment, phi1: &Multisegment, phi2: &Multisegment, poly: HallPolynomial) {
    memo().lock().unwrap().insert((psi.clone(), phi1.clone(), phi2.clone()), poly);
}

/// Everything computed so far in this process.
pub fn memo_snapshot() -> Vec<(Multisegment, Multisegment, Multisegment, HallPolynomial)> {
    memo()
        .lock()
        .unwrap()
        .iter()
        .map(|((a, b, c), p)| (a.clone(), b.clone(), c.clone(), p.clone()))
        .collect()
}

/// `F^ψ_{φ1,φ2}(q)`, memoized.
pub fn hall_polynomial(psi: &Multisegment, phi1: &Multisegment, phi2: &Multisegment) -> Result<HallPolynomial> {
    hall_polynomial_with(HallConfig::default(), psi, phi1, phi2)
}

pub fn hall_polynomial_with(
    cfg: HallConfig,
    psi: &Multisegment,
    phi1: &Multisegment,
    phi2: &Multisegment,
) -> Result<HallPolynomial> {
    let key = (psi.clone(), phi1.clone(), phi2.clone());
    if let Some(p) = memo().lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let poly = compute_polynomial(cfg, psi, phi1, phi2)?;
    memo().lock().unwrap().insert(key, poly.clone());
    Ok(poly)
}

fn compute_polynomial(cfg: HallConfig, psi: &Multisegment, phi1: &Multisegment, phi2: &Multisegment) -> Result<HallPolynomial> {
    if psi.e() != phi1.e() || psi.e() != phi2.e() || psi.weight() != phi1.weight().add(&phi2.weight()) {
        return Ok(HallPolynomial::zero());
    }
    // Residues where ψ vanishes split M_ψ into blocks that no arrow connects;
    // submodules and isomorphism types split the same way.
    let mut poly = HallPolynomial::one();
    for block in blocks(&psi.weight()) {
        let restrict = |m: &Multisegment| {
            Multisegment::from_segments(
                m.e(),
                m.iter()
                    .filter(|(s, _)| block.contains(&s.head().value()))
                    .flat_map(|(s, k)| std::iter::repeat_n(*s, k as usize)),
            )
        };
        let (b, b1, b2) = (restrict(psi), restrict(phi1), restrict(phi2));
        let factor = if block.len() == 1 && (block.len() as u32) < psi.e() {
            // a lone residue: every subspace is a submodule
            let i = Residue::new(block[0] as i64, psi.e());
            HallPolynomial::gaussian_binomial(b.weight().get(i), b2.weight().get(i))
        } else {
            interpolate(cfg, &b, &b1, &b2)?
        };
        poly = poly.mul(&factor);
        if poly.is_zero() {
            break;
        }
    }
    Ok(poly)
}

/// Maximal cyclic runs of residues with nonzero dimension.
fn blocks(d: &DimVector) -> Vec<Vec<u32>> {
    let e = d.e();
    let live: Vec<bool> = d.0.iter().map(|&x| x > 0).collect();
    if live.iter().all(|&x| x) {
        return vec![(0..e).collect()];
    }
    let start = (0..e).find(|&i| !live[i as usize]).unwrap();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for t in 1..=e {
        let i = (start + t) % e;
        if live[i as usize] {
            cur.push(i);
        } else if !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
    }
    out
}

/// Adaptive interpolation: with `k` points, accept the interpolant once it
/// has integer coefficients and predicts the next two primes.
fn interpolate(cfg: HallConfig, psi: &Multisegment, phi1: &Multisegment, phi2: &Multisegment) -> Result<HallPolynomial> {
    let primes = first_primes(cfg.prime_budget);
    let mut values: Vec<BigInt> = Vec::new();
    let value = |j: usize, values: &mut Vec<BigInt>| -> Result<BigInt> {
        while values.len() <= j {
            let p = primes[values.len()];
            values.push(BigInt::from(hall_number_with(cfg.exec, psi, phi1, phi2, p)?));
        }
        Ok(values[j].clone())
    };
    for k in 1..primes.len().saturating_sub(1) {
        for j in 0..k + 2 {
            value(j, &mut values)?;
        }
        let xs: Vec<u32> = primes[..k].to_vec();
        let Some(poly) = newton(&xs, &values[..k]) else {
            continue;
        };
        if (k..k + 2).all(|j| poly.eval(primes[j] as u64) == values[j]) {
            return Ok(poly);
        }
    }
    Err(Error::Interpolation(cfg.prime_budget))
}

/// Interpolating polynomial through `(x_j, y_j)`, if its coefficients are
/// integers.
fn newton(xs: &[u32], ys: &[BigInt]) -> Option<HallPolynomial> {
    let n = xs.len();
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    let mut dd: Vec<BigRational> = ys.iter().map(q).collect();
    for level in 1..n {
        for j in (level..n).rev() {
            let num = &dd[j] - &dd[j - 1];
            let den = BigRational::from_integer(BigInt::from(xs[j] as i64 - xs[j - level] as i64));
            dd[j] = num / den;
        }
    }
    // expand Σ dd[j] Π_{t<j} (q - x_t) into monomial coefficients
    let mut coeffs = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::one()];
    for j in 0..n {
        for (c, b) in coeffs.iter_mut().zip(&basis) {
            *c += &dd[j] * b;
        }
        let x = BigRational::from_integer(BigInt::from(xs[j]));
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (t, b) in basis.iter().enumerate() {
            next[t + 1] += b;
            next[t] -= &x * b;
        }
        basis = next;
    }
    if coeffs.iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(HallPolynomial::new(coeffs.into_iter().map(|c| c.to_integer()).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(e: u32, s: &[(i64, u32)]) -> Multisegment {
        Multisegment::from_heads(e, s)
    }

    #[test]
    fn small_hall_numbers() {
        let psi = h(3, &[(1, 2)]);
        let (s1, s2) = (h(3, &[(1, 1)]), h(3, &[(2, 1)]));
        for p in [2, 3, 5] {
            assert_eq!(hall_number(&psi, &s1, &s2, p).unwrap(), 1);
            assert_eq!(hall_number(&psi, &s2, &s1, p).unwrap(), 0);
            let two = h(3, &[(1, 1), (1, 1)]);
            assert_eq!(hall_number(&two, &s1, &s1, p).unwrap(), p as u64 + 1);
        }
        assert_eq!(hall_number(&psi, &s1, &s1, 3).unwrap(), 0);
        assert!(hall_number(&psi, &s1, &s2, 4).is_err());
        let big = h(2, &[(0, 7)]);
        assert!(matches!(hall_number(&big, &big, &Multisegment::empty(2), 2), Err(Error::DimensionLimit(7, 6))));
    }

    #[test]
    fn small_hall_polynomials() {
        let s1 = h(3, &[(1, 1)]);
        let two = h(3, &[(1, 1), (1, 1)]);
        assert_eq!(hall_polynomial(&two, &s1, &s1).unwrap(), HallPolynomial::from_i64(&[1, 1]));
        let psi = h(3, &[(1, 2)]);
        let s2 = h(3, &[(2, 1)]);
        assert_eq!(hall_polynomial(&psi, &s1, &s2).unwrap(), HallPolynomial::one());
        assert_eq!(hall_polynomial(&psi, &s1, &s1).unwrap(), HallPolynomial::zero());
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(HallPolynomial::gaussian_binomial(4, 2), HallPolynomial::from_i64(&[1, 1, 2, 1, 1]));
        assert_eq!(HallPolynomial::gaussian_binomial(3, 0), HallPolynomial::one());
        assert_eq!(HallPolynomial::gaussian_binomial(2, 3), HallPolynomial::zero());
    }

    #[test]
    fn block_split() {
        assert_eq!(blocks(&DimVector(vec![1, 0, 2, 1, 0])), vec![vec![2, 3], vec![0]]);
        assert_eq!(blocks(&DimVector(vec![1, 1])), vec![vec![0, 1]]);
    }

    #[test]
    fn interpolation_agrees_with_counts() {
        let e = 2;
        let psi = h(e, &[(0, 2), (0, 1), (1, 1)]);
        let phi1 = h(e, &[(0, 1), (1, 1)]);
        let phi2 = h(e, &[(0, 1), (1, 1)]);
        let poly = hall_polynomial(&psi, &phi1, &phi2).unwrap();
        for p in [17, 19] {
            assert_eq!(poly.eval(p as u64), BigInt::from(hall_number(&psi, &phi1, &phi2, p).unwrap()));
        }
    }

    #[test]
    fn display_and_json() {
        let p = HallPolynomial::from_i64(&[1, -2, 0, 1]);
        assert_eq!(p.to_string(), "q^3 - 2q + 1");
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,-2,0,1]");
        assert_eq!(serde_json::from_str::<HallPolynomial>("[1,-2,0,1]").unwrap(), p);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let psi = h(2, &[(0, 2), (1, 2)]);
        let phi1 = h(2, &[(0, 1), (1, 1)]);
        let phi2 = h(2, &[(0, 1), (1, 1)]);
        for p in [2, 3, 5] {
            assert_eq!(
                hall_number_with(Exec::Sequential, &psi, &phi1, &phi2, p).unwrap(),
                hall_number_with(Exec::Parallel, &psi, &phi1, &phi2, p).unwrap()
            );
        }
    }
}
