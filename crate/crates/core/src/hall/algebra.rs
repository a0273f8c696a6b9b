//! The Hall algebra in the PBW basis `E_ψ = v^{dim O_ψ} u_ψ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hall::count::hall_polynomial;
use crate::hall::laurent::LaurentPoly;
use crate::hall::quiver::{dim_orbit, RankTable};
use crate::multiseg::{DimVector, Multisegment, Residue, Segment};

/// `m(a, b) = Σ_i (a_i b_{i+1} + a_i b_i)`
pub fn m_form(a: &DimVector, b: &DimVector) -> i64 {
    let e = a.0.len();
    (0..e)
        .map(|i| a.0[i] as i64 * (b.0[(i + 1) % e] as i64 + b.0[i] as i64))
        .sum()
}

/// Memoized `dim O_ψ`.
pub fn orbit_dim(psi: &Multisegment) -> u32 {
    static MEMO: OnceLock<Mutex<HashMap<Multisegment, u32>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(&d) = memo.lock().unwrap().get(psi) {
        return d;
    }
    let d = dim_orbit(psi);
    memo.lock().unwrap().insert(psi.clone(), d);
    d
}

fn multisegments_of_weight(d: &DimVector) -> Vec<Multisegment> {
    static MEMO: OnceLock<Mutex<HashMap<DimVector, Vec<Multisegment>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(v) = memo.lock().unwrap().get(d) {
        return v.clone();
    }
    let v = Multisegment::all_with_weight(d);
    memo.lock().unwrap().insert(d.clone(), v.clone());
    v
}

/// A homogeneous element `Σ c_ψ(v) E_ψ` of the Hall algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PBWVector {
    e: u32,
    terms: BTreeMap<Multisegment, LaurentPoly>,
}

impl PBWVector {
    pub fn zero(e: u32) -> Self {
        PBWVector { e, terms: BTreeMap::new() }
    }

    /// `E_∅`, the unit.
    pub fn one(e: u32) -> Self {
        PBWVector::basis(&Multisegment::empty(e))
    }

    /// `E_ψ`
    pub fn basis(psi: &Multisegment) -> Self {
        let mut x = PBWVector::zero(psi.e());
        x.add_term(psi, &LaurentPoly::one());
        x
    }

    /// `u_ψ = v^{-dim O_ψ} E_ψ`
    pub fn u(psi: &Multisegment) -> Self {
        let mut x = PBWVector::zero(psi.e());
        x.add_term(psi, &LaurentPoly::monomial(-(orbit_dim(psi) as i32)));
        x
    }

    /// `f_i = u_{[i;1]} = E_{[i;1]}`
    pub fn generator(i: Residue, e: u32) -> Self {
        PBWVector::basis(&Multisegment::from_segments(e, [Segment::with_head(i, 1)]))
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn add_term(&mut self, psi: &Multisegment, c: &LaurentPoly) {
        assert_eq!(psi.e(), self.e, "mixed e in a PBW vector");
        let slot = self.terms.entry(psi.clone()).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(psi);
        }
    }

    pub fn add(&self, o: &PBWVector) -> PBWVector {
        let mut out = self.clone();
        for (psi, c) in &o.terms {
            out.add_term(psi, c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> PBWVector {
        let mut out = PBWVector::zero(self.e);
        for (psi, x) in &self.terms {
            out.add_term(psi, &(x * c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, psi: &Multisegment) -> LaurentPoly {
        self.terms.get(psi).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multisegment, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Multisegment> {
        self.terms.keys().cloned().collect()
    }

    /// The common weight of the terms; `None` for the zero vector.
    pub fn weight(&self) -> Option<DimVector> {
        self.terms.keys().next().map(|m| m.weight())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut ws = self.terms.keys().map(|m| m.weight());
        match ws.next() {
            None => true,
            Some(w) => ws.all(|x| x == w),
        }
    }

    /// Coefficients in the basis `u_ψ`.
    pub fn u_coeffs(&self) -> BTreeMap<Multisegment, LaurentPoly> {
        self.terms
            .iter()
            .map(|(psi, c)| (psi.clone(), c.shift(orbit_dim(psi) as i32)))
            .collect()
    }

    pub fn from_u_coeffs(e: u32, u: &BTreeMap<Multisegment, LaurentPoly>) -> PBWVector {
        let mut out = PBWVector::zero(e);
        for (psi, c) in u {
            out.add_term(psi, &c.shift(-(orbit_dim(psi) as i32)));
        }
        out
    }

    /// Coefficients in the `u` basis at `v = 1`.
    pub fn u_at_one(&self) -> BTreeMap<Multisegment, BigInt> {
        self.u_coeffs()
            .into_iter()
            .map(|(psi, c)| (psi, c.at_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// `E_{{[0;3]}} + vE_{{[0;1],[1;2]}}`: terms by increasing lowest power
    /// of `v`, then by multisegment; coefficients other than a single power
    /// of `v` are parenthesised.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Multisegment, &LaurentPoly)> = self.terms.iter().collect();
        terms.sort_by_key(|(m, c)| (c.min_degree(), c.max_degree(), (*m).clone()));
        let mut out = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let basis = format!("E_{{{}}}", m.to_head_string());
            let single = c.terms().count() == 1;
            let (deg, lead) = c.terms().next().map(|(d, x)| (d, x.clone())).unwrap();
            let (sign, body) = if single && (lead.is_one() || lead == -BigInt::one()) {
                let var = match deg {
                    0 => String::new(),
                    1 => "v".into(),
                    d => format!("v^{d}"),
                };
                (if lead.is_one() { "+" } else { "-" }, format!("{var}{basis}"))
            } else {
                ("+", format!("({c}){basis}"))
            };
            match (k, sign) {
                (0, "+") => out.push_str(&body),
                (0, _) => out.push_str(&format!("-{body}")),
                _ => out.push_str(&format!(" {sign} {body}")),
            }
        }
        out
    }
}

impl fmt::Display for PBWVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    mseg: Multisegment,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct PBWJson {
    e: u32,
    terms: Vec<TermJson>,
}

impl Serialize for PBWVector {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        PBWJson {
            e: self.e,
            terms: self.terms.iter().map(|(m, c)| TermJson { mseg: m.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PBWVector {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = PBWJson::deserialize(de)?;
        if j.e < 2 {
            return Err(D::Error::custom(format!("field `e`: must be at least 2, got {}", j.e)));
        }
        let mut out = PBWVector::zero(j.e);
        for (k, t) in j.terms.iter().enumerate() {
            if t.mseg.e() != j.e {
                return Err(D::Error::custom(format!("field `terms[{k}].mseg.e`: expected {}", j.e)));
            }
            out.add_term(&t.mseg, &t.coeff);
        }
        if !out.is_homogeneous() {
            return Err(D::Error::custom("field `terms`: multisegments have different weights"));
        }
        Ok(out)
    }
}

type ProductMemo = HashMap<(Multisegment, Multisegment), Vec<(Multisegment, LaurentPoly)>>;

/// `u_{φ1} u_{φ2} = v^{m(dim φ1, dim φ2)} Σ_ψ F^ψ_{φ1,φ2}(v^{-2}) u_ψ`, as
/// `u`-coefficients.
pub fn u_product(phi1: &Multisegment, phi2: &Multisegment) -> Result<Vec<(Multisegment, LaurentPoly)>> {
    static MEMO: OnceLock<Mutex<ProductMemo>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let key = (phi1.clone(), phi2.clone());
    if let Some(v) = memo.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let (d1, d2) = (phi1.weight(), phi2.weight());
    let d = d1.add(&d2);
    let m = m_form(&d1, &d2) as i32;
    let n = d.total();
    let (r1, r2) = (RankTable::of_multisegment(phi1, n), RankTable::of_multisegment(phi2, n));
    let mut out = Vec::new();
    for psi in multisegments_of_weight(&d) {
        // an extension of φ1 by φ2 degenerates to φ1 ⊕ φ2, so ranks can only grow
        if !RankTable::of_multisegment(&psi, n).dominates_sum(&r1, &r2) {
            continue;
        }
        let f = hall_polynomial(&psi, phi1, phi2)?;
        if f.is_zero() {
            continue;
        }
        out.push((psi, LaurentPoly::from_q_poly_at_v_minus_2(&f.coeffs()).shift(m)));
    }
    memo.lock().unwrap().insert(key, out.clone());
    Ok(out)
}

/// Product in the Hall algebra.
pub fn hall_product(x: &PBWVector, y: &PBWVector) -> Result<PBWVector> {
    if x.e != y.e {
        return Err(Error::WeightMismatch(format!("e = {}", x.e), format!("e = {}", y.e)));
    }
    let mut acc: BTreeMap<Multisegment, LaurentPoly> = BTreeMap::new();
    let (xu, yu) = (x.u_coeffs(), y.u_coeffs());
    for (phi1, a) in &xu {
        for (phi2, b) in &yu {
            let ab = a * b;
            for (psi, c) in u_product(phi1, phi2)? {
                let slot = acc.entry(psi).or_default();
                *slot = &*slot + &(&ab * &c);
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(PBWVector::from_u_coeffs(x.e, &acc))
}

/// `ρ(E_ψ) = E_{ρ(ψ)}`
pub fn rho_on_hall(x: &PBWVector) -> PBWVector {
    let mut out = PBWVector::zero(x.e);
    for (psi, c) in &x.terms {
        out.add_term(&psi.rho(), c);
    }
    out
}

/// A word in divided powers `f_{i_1}^{(n_1)} ⋯ f_{i_k}^{(n_k)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(pub Vec<(Residue, u32)>);

impl Word {
    /// Plain word `f_{i_1} ⋯ f_{i_k}`.
    pub fn plain(e: u32, residues: &[i64]) -> Word {
        Word(residues.iter().map(|&i| (Residue::new(i, e), 1)).collect())
    }

    pub fn weight(&self, e: u32) -> DimVector {
        let mut d = DimVector::zero(e);
        for &(i, n) in &self.0 {
            d.0[i.value() as usize] += n;
        }
        d
    }

    /// Every word of weight `α` in which neighbouring blocks have different
    /// residues.
    pub fn all_of_weight(alpha: &DimVector) -> Vec<Word> {
        fn go(left: &mut Vec<u32>, last: Option<usize>, cur: &mut Vec<(Residue, u32)>, out: &mut Vec<Word>, e: u32) {
            if left.iter().all(|&x| x == 0) {
                out.push(Word(cur.clone()));
                return;
            }
            for i in 0..left.len() {
                if Some(i) == last {
                    continue;
                }
                for n in 1..=left[i] {
                    left[i] -= n;
                    cur.push((Residue::new(i as i64, e), n));
                    go(left, Some(i), cur, out, e);
                    cur.pop();
                    left[i] += n;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut alpha.0.clone(), None, &mut Vec::new(), &mut out, alpha.e());
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(i, n)| if n == 1 { format!("f_{i}") } else { format!("f_{i}^({n})") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `f_i^{(n)} = f_i^n / [n]!` in the PBW basis.
pub fn divided_power(i: Residue, n: u32, e: u32) -> Result<PBWVector> {
    let f = PBWVector::generator(i, e);
    let mut x = PBWVector::one(e);
    for _ in 0..n {
        x = hall_product(&x, &f)?;
    }
    let fact = LaurentPoly::quantum_factorial(n);
    let mut out = PBWVector::zero(e);
    for (psi, c) in x.terms() {
        let q = c
            .div_exact(&fact)
            .ok_or_else(|| Error::Internal(format!("[{n}]! does not divide the coefficient {c} of f_{i}^{n}")))?;
        out.add_term(psi, &q);
    }
    Ok(out)
}

/// PBW expansion of a word in divided powers, multiplied left to right.
pub fn monomial_to_pbw(word: &Word, e: u32) -> Result<PBWVector> {
    let mut x = PBWVector::one(e);
    for &(i, n) in &word.0 {
        x = hall_product(&x, &divided_power(i, n, e)?)?;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(e: u32, s: &[(i64, u32)]) -> Multisegment {
        Multisegment::from_heads(e, s)
    }

    fn r(i: i64) -> Residue {
        Residue::new(i, 3)
    }

    #[test]
    fn bilinear_form() {
        let e1 = DimVector(vec![0, 1, 0]);
        let e2 = DimVector(vec![0, 0, 1]);
        assert_eq!(m_form(&DimVector::zero(3), &e2), 0);
        assert_eq!(m_form(&e1, &e2), 1);
        assert_eq!(m_form(&e2, &e1), 0);
        assert_eq!(m_form(&e1, &e1), 1);
    }

    #[test]
    fn products_of_two_generators() {
        let f1 = PBWVector::generator(r(1), 3);
        let f2 = PBWVector::generator(r(2), 3);
        let mut want = PBWVector::basis(&h(3, &[(1, 2)]));
        want.add_term(&h(3, &[(1, 1), (2, 1)]), &LaurentPoly::monomial(1));
        assert_eq!(hall_product(&f1, &f2).unwrap(), want);
        assert_eq!(hall_product(&f2, &f1).unwrap(), PBWVector::basis(&h(3, &[(1, 1), (2, 1)])));
        let one = PBWVector::one(3);
        assert_eq!(hall_product(&one, &f1).unwrap(), f1);
        assert_eq!(hall_product(&f1, &one).unwrap(), f1);
    }

    #[test]
    fn divided_square() {
        let x = monomial_to_pbw(&Word(vec![(r(1), 2)]), 3).unwrap();
        assert_eq!(x, PBWVector::basis(&h(3, &[(1, 1), (1, 1)])));
        let sq = monomial_to_pbw(&Word::plain(3, &[1, 1]), 3).unwrap();
        assert_eq!(sq, x.scale(&LaurentPoly::quantum_int(2)));
    }

    #[test]
    fn rho_relabels() {
        let x = PBWVector::basis(&h(3, &[(1, 2)]));
        let y = rho_on_hall(&x);
        assert_eq!(y, PBWVector::basis(&Multisegment::from_tails(3, &[(2, 2)])));
        assert_eq!(rho_on_hall(&y), x);
        assert_eq!(rho_on_hall(&PBWVector::one(3)), PBWVector::one(3));
    }

    #[test]
    fn words_of_weight() {
        let delta = DimVector(vec![1, 1, 1]);
        assert_eq!(Word::all_of_weight(&delta).len(), 6);
        let two = DimVector(vec![2, 0]);
        assert_eq!(Word::all_of_weight(&two), vec![Word(vec![(Residue::new(0, 2), 2)])]);
        assert_eq!(Word::plain(3, &[0, 1]).to_string(), "f_0 f_1");
    }

    #[test]
    fn text_and_json() {
        let f1 = PBWVector::generator(r(1), 3);
        let f2 = PBWVector::generator(r(2), 3);
        let x = hall_product(&f1, &f2).unwrap();
        assert_eq!(x.to_text(), "E_{{[1;2]}} + vE_{{[1;1],[2;1]}}");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<PBWVector>(&s).unwrap(), x);
        let bad = r#"{"e":3,"terms":[{"mseg":{"e":3,"segments":[{"head":0,"len":1,"mult":1}]},"coeff":{"0":1}},{"mseg":{"e":3,"segments":[{"head":1,"len":1,"mult":1}]},"coeff":{"0":1}}]}"#;
        assert!(serde_json::from_str::<PBWVector>(bad).unwrap_err().to_string().contains("terms"));
    }
}
