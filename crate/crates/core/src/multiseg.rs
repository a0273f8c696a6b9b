//! Multisegments over `Z/eZ` and the crystal `B(∞)` they carry.
//!
//! A segment is a run of consecutive residues. It is stored by head and
//! length only; the tail `head + len - 1 (mod e)` is always derived. Two
//! crystal structures live on the aperiodic multisegments:
//!
//! * [`Convention::Head`]: nodes are read at the left end of segments; `f_i`
//!   adds `[i;1]` or turns `[i+1; l-1]` into `[i; l]`.
//! * [`Convention::Tail`]: nodes are read at the right end; `f_i` adds
//!   `(1;i]` or turns `(l-1; i-1]` into `(l; i]`.
//!
//! [`Multisegment::rho`] exchanges the two, sending `[i;l]` to `(l;-i]` and
//! intertwining `f_i` (head) with `f_{-i}` (tail).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A residue class modulo `e`, stored by its representative in `0..e`.
///
/// The modulus is carried by the surrounding context (the multisegment or
/// multicharge the residue is used with).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Residue(u32);

impl Residue {
    pub fn new(value: i64, e: u32) -> Self {
        Residue(value.rem_euclid(e as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    /// `self + k (mod e)`
    pub fn shift(self, k: i64, e: u32) -> Self {
        Residue::new(self.0 as i64 + k, e)
    }

    pub fn neg(self, e: u32) -> Self {
        Residue::new(-(self.0 as i64), e)
    }

    pub fn all(e: u32) -> impl Iterator<Item = Residue> {
        (0..e).map(Residue)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which end of a segment carries the crystal nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Head,
    Tail,
}

impl std::str::FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "head" => Ok(Convention::Head),
            "tail" => Ok(Convention::Tail),
            other => Err(format!("unknown convention '{other}' (expected head|tail)")),
        }
    }
}

/// A segment `[head; len]`.
///
/// Field order matters: the derived `Ord` sorts by length first, then head,
/// which is the canonical order of segments inside a multisegment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    len: u32,
    head: Residue,
}

impl Segment {
    /// The segment `[head; len]`. Panics on `len == 0`.
    pub fn with_head(head: Residue, len: u32) -> Self {
        assert!(len >= 1, "segments have positive length");
        Segment { len, head }
    }

    /// The segment `(len; tail]`, i.e. head `tail - len + 1`.
    pub fn with_tail(len: u32, tail: Residue, e: u32) -> Self {
        Segment::with_head(tail.shift(1 - len as i64, e), len)
    }

    pub fn head(&self) -> Residue {
        self.head
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn tail(&self, e: u32) -> Residue {
        self.head.shift(self.len as i64 - 1, e)
    }

    /// Residues covered by the segment, from head to tail.
    pub fn residues(&self, e: u32) -> impl Iterator<Item = Residue> + '_ {
        (0..self.len).map(move |t| self.head.shift(t as i64, e))
    }
}

/// Dimension vector: `counts[i]` is the number of nodes of residue `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVector(pub Vec<u32>);

impl DimVector {
    pub fn zero(e: u32) -> Self {
        DimVector(vec![0; e as usize])
    }

    pub fn unit(i: Residue, e: u32) -> Self {
        let mut v = Self::zero(e);
        v.0[i.value() as usize] = 1;
        v
    }

    pub fn e(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, i: Residue) -> u32 {
        self.0[i.value() as usize]
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// The weight `-Σ counts_i α_i`.
    pub fn to_weight(&self) -> AffineWeight {
        AffineWeight {
            lambda: vec![0; self.0.len()],
            alpha: self.0.iter().map(|&c| -(c as i64)).collect(),
        }
    }
}

/// Entry `a_{ij} = <α_j, α_i^∨>` of the Cartan matrix of type `A_{e-1}^{(1)}`.
pub fn cartan(i: Residue, j: Residue, e: u32) -> i64 {
    if i == j {
        2
    } else if e == 2 {
        -2
    } else if i.shift(1, e) == j || j.shift(1, e) == i {
        -1
    } else {
        0
    }
}

/// A weight `Σ lambda_i Λ_i + Σ alpha_i α_i` of the affine algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineWeight {
    pub lambda: Vec<i64>,
    pub alpha: Vec<i64>,
}

impl AffineWeight {
    pub fn e(&self) -> u32 {
        self.alpha.len() as u32
    }

    /// `<self, α_j^∨>`, with `Λ_i(α_j^∨) = δ_ij`.
    pub fn pair_coroot(&self, j: Residue) -> i64 {
        let e = self.e();
        let roots: i64 = Residue::all(e)
            .map(|i| self.alpha[i.value() as usize] * cartan(j, i, e))
            .sum();
        self.lambda[j.value() as usize] + roots
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (sym, coeffs) in [("Λ", &self.lambda), ("α", &self.alpha)] {
            for (i, &c) in coeffs.iter().enumerate() {
                match c {
                    0 => {}
                    1 => terms.push(format!("+ {sym}_{i}")),
                    -1 => terms.push(format!("- {sym}_{i}")),
                    c if c > 0 => terms.push(format!("+ {c}{sym}_{i}")),
                    c => terms.push(format!("- {}{sym}_{i}", -c)),
                }
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let s = terms.join(" ");
        write!(f, "{}", s.strip_prefix("+ ").unwrap_or(&s))
    }
}

/// A finite multiset of segments over `Z/eZ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multisegment {
    e: u32,
    segs: BTreeMap<Segment, u32>,
}

impl Multisegment {
    pub fn empty(e: u32) -> Self {
        assert!(e >= 2, "e must be at least 2");
        Multisegment {
            e,
            segs: BTreeMap::new(),
        }
    }

    pub fn from_segments(e: u32, segs: impl IntoIterator<Item = Segment>) -> Self {
        let mut m = Multisegment::empty(e);
        for s in segs {
            m.insert(s, 1);
        }
        m
    }

    /// Convenience constructor from `(head, len)` pairs.
    pub fn from_heads(e: u32, segs: &[(i64, u32)]) -> Self {
        Self::from_segments(
            e,
            segs.iter()
                .map(|&(h, l)| Segment::with_head(Residue::new(h, e), l)),
        )
    }

    /// Convenience constructor from `(len, tail)` pairs.
    pub fn from_tails(e: u32, segs: &[(u32, i64)]) -> Self {
        Self::from_segments(
            e,
            segs.iter()
                .map(|&(l, t)| Segment::with_tail(l, Residue::new(t, e), e)),
        )
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn insert(&mut self, seg: Segment, mult: u32) {
        if mult > 0 {
            *self.segs.entry(seg).or_insert(0) += mult;
        }
    }

    /// Removes one copy of `seg`; returns false if it was absent.
    pub fn remove(&mut self, seg: &Segment) -> bool {
        match self.segs.get_mut(seg) {
            Some(m) if *m > 1 => {
                *m -= 1;
                true
            }
            Some(_) => {
                self.segs.remove(seg);
                true
            }
            None => false,
        }
    }

    pub fn mult(&self, seg: &Segment) -> u32 {
        self.segs.get(seg).copied().unwrap_or(0)
    }

    /// `m_{[i;l]}`
    pub fn mult_head(&self, head: Residue, len: u32) -> u32 {
        if len == 0 {
            return 0;
        }
        self.mult(&Segment::with_head(head, len))
    }

    /// `m_{(l;i]}`
    pub fn mult_tail(&self, len: u32, tail: Residue) -> u32 {
        if len == 0 {
            return 0;
        }
        self.mult(&Segment::with_tail(len, tail, self.e))
    }

    /// Distinct segments with multiplicities, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Segment, u32)> {
        self.segs.iter().map(|(s, &m)| (s, m))
    }

    /// All segments with repetition, in canonical order.
    pub fn segments(&self) -> Vec<Segment> {
        self.iter()
            .flat_map(|(s, m)| std::iter::repeat_n(*s, m as usize))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    /// Total number of nodes.
    pub fn size(&self) -> u32 {
        self.iter().map(|(s, m)| s.len * m).sum()
    }

    /// Number of segments, counted with multiplicity.
    pub fn count(&self) -> u32 {
        self.segs.values().sum()
    }

    pub fn max_len(&self) -> u32 {
        self.segs.keys().map(|s| s.len).max().unwrap_or(0)
    }

    /// True iff at every length some residue is missing as a head.
    pub fn is_aperiodic(&self) -> bool {
        let mut heads_by_len: BTreeMap<u32, u32> = BTreeMap::new();
        for s in self.segs.keys() {
            *heads_by_len.entry(s.len).or_insert(0) += 1;
        }
        heads_by_len.values().all(|&n| n < self.e)
    }

    pub fn check_aperiodic(&self) -> Result<()> {
        if self.is_aperiodic() {
            Ok(())
        } else {
            Err(Error::NotAperiodic(self.to_head_string()))
        }
    }

    pub fn weight(&self) -> DimVector {
        let mut counts = vec![0u32; self.e as usize];
        for (s, m) in self.iter() {
            for r in s.residues(self.e) {
                counts[r.value() as usize] += m;
            }
        }
        DimVector(counts)
    }

    /// `[i;l] ↦ (l;-i]`, an involution.
    pub fn rho(&self) -> Multisegment {
        let e = self.e;
        let mut out = Multisegment::empty(e);
        for (s, m) in self.iter() {
            out.insert(Segment::with_tail(s.len, s.head.neg(e), e), m);
        }
        out
    }

    /// `S_{l,i}` for `l = 1 ..= max_len + 1`; entry `k` holds `S_{k+1,i}`.
    pub fn s_profile(&self, i: Residue, conv: Convention) -> Vec<i64> {
        let e = self.e;
        let top = self.max_len() + 1;
        let mut out = vec![0i64; top as usize];
        let mut acc = 0i64;
        for l in (1..=top).rev() {
            let (addable, removable) = match conv {
                Convention::Head => (self.mult_head(i.shift(1, e), l), self.mult_head(i, l)),
                Convention::Tail => (self.mult_tail(l, i.shift(-1, e)), self.mult_tail(l, i)),
            };
            acc += addable as i64 - removable as i64;
            out[l as usize - 1] = acc;
        }
        out
    }

    /// `ε_i = -min_{l>0} S_{l,i}`. Meaningful for aperiodic input.
    pub fn epsilon(&self, i: Residue, conv: Convention) -> u32 {
        let min = self.s_profile(i, conv).into_iter().min().unwrap_or(0);
        (-min.min(0)) as u32
    }

    /// `φ_i = ε_i + <wt, α_i^∨>`.
    pub fn phi(&self, i: Residue, conv: Convention) -> i64 {
        self.epsilon(i, conv) as i64 + self.weight().to_weight().pair_coroot(i)
    }

    /// Kashiwara operator `f̃_i`. Total on aperiodic multisegments.
    pub fn tilde_f(&self, i: Residue, conv: Convention) -> Result<Multisegment> {
        self.check_aperiodic()?;
        let e = self.e;
        let prof = self.s_profile(i, conv);
        let min = *prof.iter().min().expect("profile is never empty");
        let l0 = prof.iter().position(|&s| s == min).unwrap() as u32 + 1;
        let mut out = self.clone();
        let (old, new) = match conv {
            Convention::Head => (
                (l0 > 1).then(|| Segment::with_head(i.shift(1, e), l0 - 1)),
                Segment::with_head(i, l0),
            ),
            Convention::Tail => (
                (l0 > 1).then(|| Segment::with_tail(l0 - 1, i.shift(-1, e), e)),
                Segment::with_tail(l0, i, e),
            ),
        };
        if let Some(old) = old {
            if !out.remove(&old) {
                return Err(Error::Internal(format!(
                    "f_{i} on {self}: no segment to extend at l0 = {l0}"
                )));
            }
        }
        out.insert(new, 1);
        Ok(out)
    }

    /// Kashiwara operator `ẽ_i`; `None` when `ε_i = 0`.
    pub fn tilde_e(&self, i: Residue, conv: Convention) -> Result<Option<Multisegment>> {
        self.check_aperiodic()?;
        let e = self.e;
        let prof = self.s_profile(i, conv);
        let min = *prof.iter().min().expect("profile is never empty");
        if min >= 0 {
            return Ok(None);
        }
        let l0 = prof.iter().rposition(|&s| s == min).unwrap() as u32 + 1;
        let (old, new) = match conv {
            Convention::Head => (Segment::with_head(i, l0), (l0 > 1).then(|| Segment::with_head(i.shift(1, e), l0 - 1))),
            Convention::Tail => (
                Segment::with_tail(l0, i, e),
                (l0 > 1).then(|| Segment::with_tail(l0 - 1, i.shift(-1, e), e)),
            ),
        };
        let mut out = self.clone();
        if !out.remove(&old) {
            return Err(Error::Internal(format!(
                "e_{i} on {self}: no segment to shrink at l0 = {l0}"
            )));
        }
        if let Some(s) = new {
            out.insert(s, 1);
        }
        Ok(Some(out))
    }

    /// `{[i;l], ...}` in canonical order, `∅` when empty.
    pub fn to_head_string(&self) -> String {
        self.render(|s| format!("[{};{}]", s.head, s.len))
    }

    /// `{(l;i], ...}` in canonical order, `∅` when empty.
    pub fn to_tail_string(&self) -> String {
        let e = self.e;
        self.render(|s| format!("({};{}]", s.len, s.tail(e)))
    }

    fn render(&self, seg: impl Fn(&Segment) -> String) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let parts: Vec<String> = self.segments().iter().map(seg).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Every multisegment with exactly `n` nodes.
    pub fn all_of_size(e: u32, n: u32) -> Vec<Multisegment> {
        let kinds: Vec<Segment> = (1..=n)
            .flat_map(|len| Residue::all(e).map(move |head| Segment { len, head }))
            .collect();
        let mut out = Vec::new();
        let mut cur = Multisegment::empty(e);
        fill(&kinds, 0, n, &mut cur, &mut out);
        out.sort();
        out
    }

    pub fn all_aperiodic_of_size(e: u32, n: u32) -> Vec<Multisegment> {
        Self::all_of_size(e, n)
            .into_iter()
            .filter(|m| m.is_aperiodic())
            .collect()
    }

    /// Every multisegment with the given dimension vector.
    pub fn all_with_weight(dims: &DimVector) -> Vec<Multisegment> {
        Self::all_of_size(dims.e(), dims.total())
            .into_iter()
            .filter(|m| &m.weight() == dims)
            .collect()
    }
}

fn fill(kinds: &[Segment], from: usize, left: u32, cur: &mut Multisegment, out: &mut Vec<Multisegment>) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for k in from..kinds.len() {
        let s = kinds[k];
        if s.len > left {
            break;
        }
        cur.insert(s, 1);
        fill(kinds, k, left - s.len, cur, out);
        cur.remove(&s);
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_head_string())
    }
}

#[derive(Serialize, Deserialize)]
struct SegmentJson {
    head: u32,
    len: u32,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
struct MultisegmentJson {
    e: u32,
    segments: Vec<SegmentJson>,
}

impl TryFrom<MultisegmentJson> for Multisegment {
    type Error = String;

    fn try_from(j: MultisegmentJson) -> std::result::Result<Self, String> {
        if j.e < 2 {
            return Err(format!("field `e`: must be at least 2, got {}", j.e));
        }
        let mut m = Multisegment::empty(j.e);
        for (k, s) in j.segments.iter().enumerate() {
            if s.head >= j.e {
                return Err(format!("field `segments[{k}].head`: {} is not below e = {}", s.head, j.e));
            }
            if s.len == 0 {
                return Err(format!("field `segments[{k}].len`: must be positive"));
            }
            if s.mult == 0 {
                return Err(format!("field `segments[{k}].mult`: must be positive"));
            }
            m.insert(Segment::with_head(Residue(s.head), s.len), s.mult);
        }
        Ok(m)
    }
}

impl From<&Multisegment> for MultisegmentJson {
    fn from(m: &Multisegment) -> Self {
        MultisegmentJson {
            e: m.e,
            segments: m
                .iter()
                .map(|(s, mult)| SegmentJson { head: s.head.value(), len: s.len, mult })
                .collect(),
        }
    }
}

impl Serialize for Multisegment {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        MultisegmentJson::from(self).serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Multisegment {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let j = MultisegmentJson::deserialize(de)?;
        Multisegment::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(i: i64, e: u32) -> Residue {
        Residue::new(i, e)
    }

    #[test]
    fn aperiodicity() {
        assert!(Multisegment::empty(3).is_aperiodic());
        assert!(!Multisegment::from_heads(3, &[(0, 1), (1, 1), (2, 1)]).is_aperiodic());
        assert!(Multisegment::from_heads(3, &[(1, 2), (1, 1)]).is_aperiodic());
        // multiplicity does not matter, only which heads occur
        assert!(Multisegment::from_heads(2, &[(0, 1), (0, 1), (1, 2)]).is_aperiodic());
    }

    #[test]
    fn tail_and_head_agree_on_segments() {
        let s = Segment::with_tail(2, r(2, 3), 3);
        assert_eq!(s.head(), r(1, 3));
        assert_eq!(s.tail(3), r(2, 3));
        let wrap = Segment::with_head(r(3, 4), 2);
        assert_eq!(wrap.residues(4).map(|x| x.value()).collect::<Vec<_>>(), vec![3, 0]);
    }

    #[test]
    fn s_profile_examples() {
        let e = 3;
        let psi = Multisegment::from_tails(e, &[(1, 1)]);
        assert_eq!(psi.s_profile(r(1, e), Convention::Tail), vec![-1, 0]);
        let psi = Multisegment::from_tails(e, &[(1, 1), (1, 2)]);
        assert_eq!(psi.s_profile(r(1, e), Convention::Tail), vec![-1, 0]);
        let empty = Multisegment::empty(e);
        for conv in [Convention::Head, Convention::Tail] {
            assert_eq!(empty.s_profile(r(0, e), conv), vec![0]);
        }
    }

    #[test]
    fn crystal_examples_tail() {
        let e = 3;
        let t = Convention::Tail;
        let empty = Multisegment::empty(e);
        assert_eq!(empty.tilde_f(r(1, e), t).unwrap(), Multisegment::from_tails(e, &[(1, 1)]));
        assert_eq!(
            Multisegment::from_tails(e, &[(1, 1)]).tilde_f(r(2, e), t).unwrap(),
            Multisegment::from_tails(e, &[(2, 2)])
        );
        assert_eq!(
            Multisegment::from_tails(e, &[(1, 2)]).tilde_f(r(1, e), t).unwrap(),
            Multisegment::from_tails(e, &[(1, 1), (1, 2)])
        );
        assert_eq!(
            Multisegment::from_tails(e, &[(2, 2)]).tilde_e(r(2, e), t).unwrap(),
            Some(Multisegment::from_tails(e, &[(1, 1)]))
        );
        assert_eq!(
            Multisegment::from_tails(e, &[(1, 1), (1, 2)]).tilde_e(r(1, e), t).unwrap(),
            Some(Multisegment::from_tails(e, &[(1, 2)]))
        );
        for i in 0..3 {
            assert_eq!(empty.tilde_e(r(i, e), t).unwrap(), None);
            assert_eq!(empty.epsilon(r(i, e), t), 0);
        }
        assert_eq!(Multisegment::from_tails(e, &[(1, 1), (1, 2)]).epsilon(r(1, e), t), 1);
        assert_eq!(Multisegment::from_tails(e, &[(2, 2)]).epsilon(r(2, e), t), 1);
    }

    #[test]
    fn periodic_input_is_rejected() {
        let p = Multisegment::from_heads(2, &[(0, 1), (1, 1)]);
        assert!(matches!(p.tilde_f(r(0, 2), Convention::Head), Err(Error::NotAperiodic(_))));
        assert!(matches!(p.tilde_e(r(0, 2), Convention::Tail), Err(Error::NotAperiodic(_))));
    }

    #[test]
    fn rho_examples() {
        let m = Multisegment::from_heads(3, &[(1, 2)]);
        assert_eq!(m.rho(), Multisegment::from_tails(3, &[(2, 2)]));
        assert_eq!(Multisegment::empty(3).rho(), Multisegment::empty(3));
        let m = Multisegment::from_heads(4, &[(0, 1), (3, 2)]);
        assert_eq!(m.rho(), Multisegment::from_tails(4, &[(1, 0), (2, 1)]));
        assert_eq!(m.rho().rho(), m);
    }

    #[test]
    fn weights() {
        assert_eq!(Multisegment::empty(3).weight(), DimVector(vec![0, 0, 0]));
        assert_eq!(Multisegment::from_heads(3, &[(1, 2)]).weight(), DimVector(vec![0, 1, 1]));
        assert_eq!(Multisegment::from_heads(3, &[(0, 3)]).weight(), DimVector(vec![1, 1, 1]));
    }

    #[test]
    fn cartan_entries() {
        assert_eq!(cartan(r(0, 2), r(1, 2), 2), -2);
        assert_eq!(cartan(r(0, 3), r(2, 3), 3), -1);
        assert_eq!(cartan(r(0, 4), r(2, 4), 4), 0);
        let w = AffineWeight { lambda: vec![0, 1, 1], alpha: vec![0, -1, -1] };
        assert_eq!(w.pair_coroot(r(2, 3)), 1 + 1 - 2);
        assert_eq!(w.pair_coroot(r(0, 3)), 2);
    }

    #[test]
    fn rendering() {
        let m = Multisegment::from_tails(3, &[(1, 2), (1, 1)]);
        assert_eq!(m.to_tail_string(), "{(1;1],(1;2]}");
        assert_eq!(m.to_head_string(), "{[1;1],[2;1]}");
        assert_eq!(Multisegment::empty(3).to_tail_string(), "∅");
    }

    #[test]
    fn enumeration_counts() {
        // multisegments of size n over Z/eZ: coefficient of q^n in Π_{l≥1} (1-q^l)^{-e}
        let counts: Vec<usize> = (0..=4).map(|n| Multisegment::all_of_size(2, n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 10, 20]);
        let dims = DimVector(vec![1, 1, 1]);
        assert_eq!(Multisegment::all_with_weight(&dims).len(), 7);
    }

    #[test]
    fn json_form() {
        let m = Multisegment::from_heads(3, &[(1, 2)]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"e":3,"segments":[{"head":1,"len":2,"mult":1}]}"#);
        let back: Multisegment = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        let bad = serde_json::from_str::<Multisegment>(r#"{"e":3,"segments":[{"head":5,"len":2,"mult":1}]}"#);
        assert!(bad.unwrap_err().to_string().contains("segments[0].head"));
    }
}
