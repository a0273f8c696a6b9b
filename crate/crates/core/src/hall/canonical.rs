//! Canonical basis elements at small weight, found as bar-invariant
//! combinations of divided-power monomials with unitriangular PBW expansion.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hall::algebra::{monomial_to_pbw, PBWVector, Word};
use crate::hall::laurent::LaurentPoly;
use crate::hall::linalg::{self, Field, Matrix, Rationals};
use crate::multiseg::{DimVector, Multisegment};

/// Search limits for [`canonical_basis`].
#[derive(Debug, Clone, Copy)]
pub struct CanonicalConfig {
    /// Largest `|α|` accepted.
    pub word_length_cap: u32,
    /// Largest `k` in the symmetric ansatz `a_0 + Σ a_k (v^k + v^{-k})`.
    pub max_sym_degree: u32,
}

impl Default for CanonicalConfig {
    fn default() -> Self {
        CanonicalConfig { word_length_cap: 6, max_sym_degree: 8 }
    }
}

/// `G_v(ψ)` with one way of writing it through monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalElement {
    pub label: Multisegment,
    pub pbw: PBWVector,
    /// Coefficient of each word, exponent ↦ rational.
    pub word_coeffs: Vec<(Word, BTreeMap<i32, BigRational>)>,
}

impl CanonicalElement {
    /// `E_ψ` with coefficient 1 and every other coefficient in `vZ[v]`.
    pub fn is_triangular(&self) -> bool {
        self.pbw.terms().all(|(m, c)| {
            if *m == self.label {
                *c == LaurentPoly::one()
            } else {
                c.in_v_z_v()
            }
        }) && !self.pbw.coeff(&self.label).is_zero()
    }

    /// The word coefficients are invariant under `v ↦ v^{-1}`.
    pub fn is_bar_symmetric(&self) -> bool {
        self.word_coeffs
            .iter()
            .all(|(_, c)| c.iter().all(|(k, x)| c.get(&-k).is_some_and(|y| y == x)))
    }

    /// The word, if `G_v(ψ)` is a single monomial with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Word> {
        let mut nz = self.word_coeffs.iter().filter(|(_, c)| !c.is_empty());
        let (w, c) = nz.next()?;
        if nz.next().is_some() {
            return None;
        }
        (c.len() == 1 && c.get(&0) == Some(&BigRational::one())).then_some(w)
    }
}

struct Monomials {
    words: Vec<Word>,
    pbw: Vec<PBWVector>,
}

fn monomials(alpha: &DimVector) -> Result<Arc<Monomials>> {
    static MEMO: OnceLock<Mutex<HashMap<DimVector, Arc<Monomials>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(m) = memo.lock().unwrap().get(alpha) {
        return Ok(m.clone());
    }
    let words = Word::all_of_weight(alpha);
    let pbw = words
        .iter()
        .map(|w| monomial_to_pbw(w, alpha.e()))
        .collect::<Result<Vec<_>>>()?;
    let m = Arc::new(Monomials { words, pbw });
    memo.lock().unwrap().insert(alpha.clone(), m.clone());
    Ok(m)
}

/// `G_v(ψ)` for every aperiodic `ψ` of weight `α`.
pub fn canonical_basis(alpha: &DimVector, cfg: CanonicalConfig) -> Result<BTreeMap<Multisegment, CanonicalElement>> {
    static MEMO: OnceLock<Mutex<HashMap<DimVector, BTreeMap<Multisegment, CanonicalElement>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(b) = memo.lock().unwrap().get(alpha) {
        return Ok(b.clone());
    }
    if alpha.total() > cfg.word_length_cap {
        return Err(Error::CanonicalBasis(format!(
            "weight of size {} exceeds the word length cap {}",
            alpha.total(),
            cfg.word_length_cap
        )));
    }
    let mono = monomials(alpha)?;
    let mut out = BTreeMap::new();
    for psi in Multisegment::all_with_weight(alpha).into_iter().filter(|m| m.is_aperiodic()) {
        let g = solve_one(&psi, &mono, cfg)?;
        out.insert(psi, g);
    }
    memo.lock().unwrap().insert(alpha.clone(), out.clone());
    Ok(out)
}

/// `G_v(ψ)` for a single aperiodic `ψ`.
pub fn canonical_element(psi: &Multisegment, cfg: CanonicalConfig) -> Result<CanonicalElement> {
    psi.check_aperiodic()?;
    canonical_basis(&psi.weight(), cfg)?
        .remove(psi)
        .ok_or_else(|| Error::Internal(format!("no canonical element for {psi}")))
}

/// Laurent polynomial with rational coefficients.
type QPoly = BTreeMap<i32, BigRational>;

fn solve_one(psi: &Multisegment, mono: &Monomials, cfg: CanonicalConfig) -> Result<CanonicalElement> {
    let q = Rationals;
    let mut support: BTreeSet<Multisegment> = mono.pbw.iter().flat_map(|x| x.support()).collect();
    support.insert(psi.clone());
    let (lo, hi) = mono
        .pbw
        .iter()
        .flat_map(|x| x.terms().flat_map(|(_, c)| [c.min_degree(), c.max_degree()]))
        .flatten()
        .fold((0, 0), |(a, b), d| (a.min(d), b.max(d)));
    let nw = mono.words.len();

    for kmax in 0..=cfg.max_sym_degree as i32 {
        let nvars = nw * (kmax as usize + 1);
        // coefficient of v^d at ψ' contributed by the unknown (w, k)
        let entry = |w: usize, k: i32, m: &Multisegment, d: i32| -> BigRational {
            let c = mono.pbw[w].coeff(m);
            let x = if k == 0 { c.coeff(d) } else { c.coeff(d - k) + c.coeff(d + k) };
            BigRational::from_integer(x)
        };
        let mut rows: Matrix<BigRational> = Vec::new();
        let mut rhs: Vec<BigRational> = Vec::new();
        for m in &support {
            for d in (lo - kmax)..=(hi + kmax) {
                let pinned = m == psi;
                if !pinned && d > 0 {
                    continue;
                }
                let row: Vec<BigRational> = (0..nw)
                    .flat_map(|w| (0..=kmax).map(move |k| (w, k)))
                    .map(|(w, k)| entry(w, k, m, d))
                    .collect();
                let target = if pinned && d == 0 { q.one() } else { q.zero() };
                rows.push(row);
                rhs.push(target);
            }
        }
        let Some(x) = linalg::solve(&q, &rows, &rhs, nvars) else {
            continue;
        };
        let combine = |x: &[BigRational]| -> (Vec<(Word, QPoly)>, BTreeMap<Multisegment, QPoly>) {
            let mut coeffs = Vec::with_capacity(nw);
            let mut pbw: BTreeMap<Multisegment, QPoly> = BTreeMap::new();
            for w in 0..nw {
                let mut a: QPoly = BTreeMap::new();
                for k in 0..=kmax {
                    let c = &x[w * (kmax as usize + 1) + k as usize];
                    if c.is_zero() {
                        continue;
                    }
                    *a.entry(k).or_insert_with(BigRational::zero) += c;
                    if k > 0 {
                        *a.entry(-k).or_insert_with(BigRational::zero) += c;
                    }
                }
                for (m, c) in mono.pbw[w].terms() {
                    let slot = pbw.entry(m.clone()).or_default();
                    for (&s, y) in &a {
                        for (t, z) in c.terms() {
                            *slot.entry(s + t).or_insert_with(BigRational::zero) += y * BigRational::from_integer(z.clone());
                        }
                    }
                }
                coeffs.push((mono.words[w].clone(), a));
            }
            for c in pbw.values_mut() {
                c.retain(|_, x| !x.is_zero());
            }
            pbw.retain(|_, c| !c.is_empty());
            (coeffs, pbw)
        };
        // any homogeneous solution must vanish as an element
        for n in linalg::nullspace(&q, &rows, nvars) {
            if !combine(&n).1.is_empty() {
                return Err(Error::CanonicalBasis(format!("solution for {psi} is not unique")));
            }
        }
        let (word_coeffs, pbw_q) = combine(&x);
        let mut pbw = PBWVector::zero(psi.e());
        for (m, c) in &pbw_q {
            let mut lp = LaurentPoly::zero();
            for (&d, y) in c {
                if !y.is_integer() {
                    return Err(Error::CanonicalBasis(format!("non-integral coefficient {y} at {m} in G({psi})")));
                }
                lp.add_term(d, y.to_integer());
            }
            pbw.add_term(m, &lp);
        }
        let g = CanonicalElement { label: psi.clone(), pbw, word_coeffs };
        if !g.is_triangular() {
            return Err(Error::CanonicalBasis(format!("G({psi}) is not unitriangular")));
        }
        return Ok(g);
    }
    Err(Error::CanonicalBasis(format!(
        "no solution for {psi} with symmetric degree up to {}; raise the cap",
        cfg.max_sym_degree
    )))
}

/// Rank over `Q(v)` of the matrix sending words of weight `α` to their PBW
/// coordinates, from evaluations at a few rational points.
pub fn monomial_rank(alpha: &DimVector) -> Result<usize> {
    let mono = monomials(alpha)?;
    let q = Rationals;
    let support: Vec<Multisegment> = mono
        .pbw
        .iter()
        .flat_map(|x| x.support())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let points = [(2, 1), (3, 1), (5, 7), (11, 3)];
    let mut best = 0;
    for (a, b) in points {
        let v = BigRational::new(BigInt::from(a), BigInt::from(b));
        let rows: Matrix<BigRational> = mono
            .pbw
            .iter()
            .map(|x| support.iter().map(|m| eval(&x.coeff(m), &v)).collect())
            .collect();
        best = best.max(linalg::rank(&q, &rows));
    }
    Ok(best)
}

fn eval(p: &LaurentPoly, v: &BigRational) -> BigRational {
    p.terms().fold(BigRational::zero(), |acc, (k, c)| {
        let pw = if k >= 0 { v.pow(k) } else { v.recip().pow(-k) };
        acc + pw * BigRational::from_integer(c.clone())
    })
}

/// `[N_{ψ'} : D_ψ]` for every `ψ'`: `G_v(ψ)` in the `u` basis at `v = 1`.
pub fn decomposition_row(psi: &Multisegment) -> Result<BTreeMap<Multisegment, u64>> {
    let g = canonical_element(psi, CanonicalConfig::default())?;
    g.pbw
        .u_at_one()
        .into_iter()
        .map(|(m, c)| {
            u64::try_from(c.clone())
                .map(|c| (m.clone(), c))
                .map_err(|_| Error::Internal(format!("negative decomposition number {c} at {m}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiseg::Residue;

    fn h(e: u32, s: &[(i64, u32)]) -> Multisegment {
        Multisegment::from_heads(e, s)
    }

    #[test]
    fn single_generator() {
        let b = canonical_basis(&DimVector(vec![0, 1, 0]), CanonicalConfig::default()).unwrap();
        assert_eq!(b.len(), 1);
        let g = &b[&h(3, &[(1, 1)])];
        assert_eq!(g.as_monomial(), Some(&Word::plain(3, &[1])));
    }

    #[test]
    fn two_generators() {
        let b = canonical_basis(&DimVector(vec![0, 1, 1]), CanonicalConfig::default()).unwrap();
        let words: BTreeSet<Word> = b.values().map(|g| g.as_monomial().unwrap().clone()).collect();
        let want: BTreeSet<Word> = [Word::plain(3, &[1, 2]), Word::plain(3, &[2, 1])].into_iter().collect();
        assert_eq!(words, want);
        assert!(b.values().all(|g| g.is_triangular() && g.is_bar_symmetric()));
    }

    #[test]
    fn divided_power_label() {
        let e = 2;
        let b = canonical_basis(&DimVector(vec![2, 0]), CanonicalConfig::default()).unwrap();
        let g = &b[&h(e, &[(0, 1), (0, 1)])];
        assert_eq!(g.as_monomial(), Some(&Word(vec![(Residue::new(0, e), 2)])));
    }

    #[test]
    fn decomposition_rows() {
        let psi = Multisegment::from_tails(3, &[(2, 2)]);
        let row = decomposition_row(&psi).unwrap();
        let want: BTreeMap<Multisegment, u64> =
            [(psi.clone(), 1), (Multisegment::from_tails(3, &[(1, 1), (1, 2)]), 1)].into_iter().collect();
        assert_eq!(row, want);
        let simple = Multisegment::from_tails(3, &[(1, 1), (1, 2)]);
        assert_eq!(decomposition_row(&simple).unwrap(), [(simple.clone(), 1)].into_iter().collect());
        assert!(decomposition_row(&h(3, &[(0, 1), (1, 1), (2, 1)])).is_err());
    }

    #[test]
    fn dimension_count() {
        for alpha in [DimVector(vec![1, 1, 1]), DimVector(vec![2, 1]), DimVector(vec![0, 2, 1])] {
            let aperiodic = Multisegment::all_with_weight(&alpha).into_iter().filter(|m| m.is_aperiodic()).count();
            assert_eq!(monomial_rank(&alpha).unwrap(), aperiodic, "weight {:?}", alpha.0);
        }
    }
}
