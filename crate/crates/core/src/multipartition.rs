//! Multipartitions and the level-`l` Fock space crystal.
//!
//! A node `(a, b, c)` sits in row `a`, column `b` of component `c` and has
//! content `b - a + v_c`. Same-residue nodes are ordered by content, ties
//! broken so that the node in the larger component comes first. The crystal
//! reads the addable (`A`) and removable (`R`) `i`-nodes in that order,
//! cancels adjacent `R A` pairs until the word is `A^φ R^ε`, then `ẽ_i`
//! removes the leftmost surviving `R` and `f̃_i` adds at the rightmost
//! surviving `A`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiseg::{AffineWeight, Residue};

/// Integer charges `(v_0, ..., v_{l-1})` together with `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multicharge {
    e: u32,
    charges: Vec<i64>,
}

impl Multicharge {
    pub fn new(e: u32, charges: Vec<i64>) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidMulticharge(format!("e must be at least 2, got {e}")));
        }
        if charges.is_empty() {
            return Err(Error::InvalidMulticharge("level l must be at least 1".into()));
        }
        Ok(Multicharge { e, charges })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn level(&self) -> usize {
        self.charges.len()
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    pub fn charge(&self, c: usize) -> i64 {
        self.charges[c]
    }

    /// The reduced charges `v̄_j`.
    pub fn residues(&self) -> Vec<Residue> {
        self.charges.iter().map(|&v| Residue::new(v, self.e)).collect()
    }

    /// `Λ = Σ_j Λ_{v̄_j}` as a coefficient vector over `Λ_0..Λ_{e-1}`.
    pub fn lambda(&self) -> Vec<i64> {
        let mut out = vec![0; self.e as usize];
        for r in self.residues() {
            out[r.value() as usize] += 1;
        }
        out
    }

    /// `v_0 <= v_1 <= ... <= v_{l-1} < v_0 + e`
    pub fn in_v_l(&self) -> bool {
        self.charges.windows(2).all(|w| w[0] <= w[1])
            && *self.charges.last().unwrap() < self.charges[0] + self.e as i64
    }

    /// `τ(v_0, ..., v_{l-1}) = (v_1, ..., v_{l-1}, v_0 + e)`
    pub fn tau(&self) -> Multicharge {
        let mut charges = self.charges[1..].to_vec();
        charges.push(self.charges[0] + self.e as i64);
        Multicharge { e: self.e, charges }
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.charges.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", cs.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct MultichargeJson {
    e: u32,
    charges: Vec<i64>,
}

impl Serialize for Multicharge {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        MultichargeJson { e: self.e, charges: self.charges.clone() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Multicharge {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let j = MultichargeJson::deserialize(de)?;
        Multicharge::new(j.e, j.charges).map_err(serde::de::Error::custom)
    }
}

/// A node `(row, col, comp)`; rows and columns start at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: u32,
    pub col: u32,
    pub comp: usize,
}

impl Node {
    pub fn new(row: u32, col: u32, comp: usize) -> Self {
        Node { row, col, comp }
    }

    /// `c(γ) = b - a + v_c`
    pub fn content(&self, v: &Multicharge) -> i64 {
        self.col as i64 - self.row as i64 + v.charge(self.comp)
    }

    pub fn residue(&self, v: &Multicharge) -> Residue {
        Residue::new(self.content(v), v.e())
    }

    /// Position in the reading order: increasing content, then decreasing
    /// component.
    fn order_key(&self, v: &Multicharge) -> (i64, std::cmp::Reverse<usize>) {
        (self.content(v), std::cmp::Reverse(self.comp))
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// `γ1 ≺_v γ2`. Both nodes must have the same residue.
pub fn precedes(g1: &Node, g2: &Node, v: &Multicharge) -> Result<bool> {
    if g1.residue(v) != g2.residue(v) {
        return Err(Error::ResidueMismatch(g1.to_string(), g2.to_string()));
    }
    Ok(g1.order_key(v) < g2.order_key(v))
}

/// An `l`-tuple of partitions, each stored as its weakly decreasing list of
/// positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition {
    components: Vec<Vec<u32>>,
}

impl MultiPartition {
    pub fn new(components: Vec<Vec<u32>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidPartition("at least one component is required".into()));
        }
        for (c, parts) in components.iter().enumerate() {
            if parts.contains(&0) {
                return Err(Error::InvalidPartition(format!("component {c} has a zero part")));
            }
            if parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidPartition(format!("component {c} is not weakly decreasing")));
            }
        }
        Ok(MultiPartition { components })
    }

    pub fn empty(level: usize) -> Self {
        MultiPartition { components: vec![Vec::new(); level] }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn component(&self, c: usize) -> &[u32] {
        &self.components[c]
    }

    /// `λ_j^{(c)}` with 1-based `j`; zero past the last row.
    pub fn part(&self, c: usize, j: usize) -> u32 {
        if j == 0 {
            return u32::MAX;
        }
        self.components[c].get(j - 1).copied().unwrap_or(0)
    }

    pub fn rank(&self) -> u32 {
        self.components.iter().flatten().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(|c| c.is_empty())
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.components.iter().enumerate().flat_map(|(c, parts)| {
            parts.iter().enumerate().flat_map(move |(a, &len)| {
                (1..=len).map(move |b| Node::new(a as u32 + 1, b, c))
            })
        })
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, parts) in self.components.iter().enumerate() {
            for a in 1..=parts.len() + 1 {
                let here = self.part(c, a);
                if a == 1 || self.part(c, a - 1) > here {
                    out.push(Node::new(a as u32, here + 1, c));
                }
            }
        }
        out
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, parts) in self.components.iter().enumerate() {
            for a in 1..=parts.len() {
                let here = self.part(c, a);
                if here > self.part(c, a + 1) {
                    out.push(Node::new(a as u32, here, c));
                }
            }
        }
        out
    }

    /// Adds an addable node; panics if the node is not addable.
    pub fn with_node(&self, n: Node) -> MultiPartition {
        let mut out = self.clone();
        let parts = &mut out.components[n.comp];
        let a = n.row as usize;
        if a == parts.len() + 1 {
            assert_eq!(n.col, 1, "node {n} is not addable");
            parts.push(1);
        } else {
            assert_eq!(parts[a - 1] + 1, n.col, "node {n} is not addable");
            parts[a - 1] += 1;
        }
        out
    }

    /// Removes a removable node; panics if the node is not removable.
    pub fn without_node(&self, n: Node) -> MultiPartition {
        let mut out = self.clone();
        let parts = &mut out.components[n.comp];
        let a = n.row as usize;
        assert_eq!(parts[a - 1], n.col, "node {n} is not removable");
        parts[a - 1] -= 1;
        if parts[a - 1] == 0 {
            parts.pop();
        }
        out
    }

    /// Componentwise transpose (no reordering of components).
    pub fn transpose(&self) -> MultiPartition {
        MultiPartition { components: self.components.iter().map(|p| conjugate(p)).collect() }
    }

    /// Number of `i`-nodes for each residue `i`.
    pub fn residue_counts(&self, v: &Multicharge) -> Vec<u32> {
        let mut out = vec![0; v.e() as usize];
        for n in self.nodes() {
            out[n.residue(v).value() as usize] += 1;
        }
        out
    }

    /// Every `l`-partition of rank `n`, in a fixed order.
    pub fn all_of_rank(level: usize, n: u32) -> Vec<MultiPartition> {
        let mut out = Vec::new();
        let mut cur = vec![Vec::new(); level];
        distribute(level, 0, n, &mut cur, &mut out);
        out
    }

    /// `((2,1),∅)`-style rendering; a single component prints as `(2,1)`.
    pub fn to_text(&self) -> String {
        let comp = |p: &Vec<u32>| {
            if p.is_empty() {
                "∅".to_string()
            } else {
                let xs: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                format!("({})", xs.join(","))
            }
        };
        if self.level() == 1 {
            return comp(&self.components[0]);
        }
        let cs: Vec<String> = self.components.iter().map(comp).collect();
        format!("({})", cs.join(","))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Conjugate (transpose) of a partition.
pub fn conjugate(parts: &[u32]) -> Vec<u32> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|b| parts.iter().filter(|&&p| p >= b).count() as u32)
        .collect()
}

/// Partitions of `n`, largest part first, in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn distribute(level: usize, c: usize, left: u32, cur: &mut Vec<Vec<u32>>, out: &mut Vec<MultiPartition>) {
    if c + 1 == level {
        for p in partitions(left) {
            cur[c] = p;
            out.push(MultiPartition { components: cur.clone() });
        }
        cur[c] = Vec::new();
        return;
    }
    for k in 0..=left {
        for p in partitions(k) {
            cur[c] = p;
            distribute(level, c + 1, left - k, cur, out);
        }
    }
    cur[c] = Vec::new();
}

#[derive(Serialize, Deserialize)]
struct MultiPartitionJson {
    components: Vec<Vec<u32>>,
}

impl Serialize for MultiPartition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        MultiPartitionJson { components: self.components.clone() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for MultiPartition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let j = MultiPartitionJson::deserialize(de)?;
        MultiPartition::new(j.components)
            .map_err(|e| serde::de::Error::custom(format!("field `components`: {e}")))
    }
}

/// Addable or removable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    A,
    R,
}

pub type SignatureWord = Vec<(Node, NodeKind)>;

/// Addable and removable `i`-nodes of `λ` in increasing `≺_v` order.
pub fn signature_word(lambda: &MultiPartition, i: Residue, v: &Multicharge) -> SignatureWord {
    let mut word: SignatureWord = lambda
        .addable_nodes()
        .into_iter()
        .map(|n| (n, NodeKind::A))
        .chain(lambda.removable_nodes().into_iter().map(|n| (n, NodeKind::R)))
        .filter(|(n, _)| n.residue(v) == i)
        .collect();
    word.sort_by(|(x, _), (y, _)| match x.order_key(v).cmp(&y.order_key(v)) {
        Ordering::Equal => x.cmp(y),
        o => o,
    });
    word
}

/// RA deletion: cancel adjacent `(R, A)` pairs until none remain.
///
/// One left-to-right pass with a stack: an `A` arriving on top of a pending
/// `R` cancels it. The survivors have the shape `A^φ R^ε`.
pub fn ra_reduce<T: Copy>(word: &[(T, NodeKind)]) -> Vec<(T, NodeKind)> {
    let mut stack: Vec<(T, NodeKind)> = Vec::with_capacity(word.len());
    for &(x, kind) in word {
        match (kind, stack.last()) {
            (NodeKind::A, Some((_, NodeKind::R))) => {
                stack.pop();
            }
            _ => stack.push((x, kind)),
        }
    }
    stack
}

fn reduced(lambda: &MultiPartition, i: Residue, v: &Multicharge) -> SignatureWord {
    ra_reduce(&signature_word(lambda, i, v))
}

fn check_level(lambda: &MultiPartition, v: &Multicharge) {
    assert_eq!(
        lambda.level(),
        v.level(),
        "multipartition {lambda} and multicharge {v} have different levels"
    );
}

/// The good removable `i`-node, if any.
pub fn good_removable(lambda: &MultiPartition, i: Residue, v: &Multicharge) -> Option<Node> {
    reduced(lambda, i, v)
        .into_iter()
        .find(|(_, k)| *k == NodeKind::R)
        .map(|(n, _)| n)
}

/// The good addable `i`-node, if any.
pub fn good_addable(lambda: &MultiPartition, i: Residue, v: &Multicharge) -> Option<Node> {
    reduced(lambda, i, v)
        .into_iter()
        .rev()
        .find(|(_, k)| *k == NodeKind::A)
        .map(|(n, _)| n)
}

pub fn tilde_e_fock(lambda: &MultiPartition, i: Residue, v: &Multicharge) -> Option<MultiPartition> {
    check_level(lambda, v);
    good_removable(lambda, i, v).map(|n| lambda.without_node(n))
}

pub fn tilde_f_fock(lambda: &MultiPartition, i: Residue, v: &Multicharge) -> Option<MultiPartition> {
    check_level(lambda, v);
    good_addable(lambda, i, v).map(|n| lambda.with_node(n))
}

/// `wt(λ) = Λ - Σ N_i(λ) α_i`
pub fn wt_fock(lambda: &MultiPartition, v: &Multicharge) -> AffineWeight {
    AffineWeight {
        lambda: v.lambda(),
        alpha: lambda.residue_counts(v).into_iter().map(|n| -(n as i64)).collect(),
    }
}

pub fn epsilon_fock(lambda: &MultiPartition, i: Residue, v: &Multicharge) -> u32 {
    reduced(lambda, i, v).iter().filter(|(_, k)| *k == NodeKind::R).count() as u32
}

pub fn phi_fock(lambda: &MultiPartition, i: Residue, v: &Multicharge) -> u32 {
    reduced(lambda, i, v).iter().filter(|(_, k)| *k == NodeKind::A).count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use NodeKind::{A, R};

    fn mp(c: &[&[u32]]) -> MultiPartition {
        MultiPartition::new(c.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    fn mc(e: u32, c: &[i64]) -> Multicharge {
        Multicharge::new(e, c.to_vec()).unwrap()
    }

    fn r(i: i64, e: u32) -> Residue {
        Residue::new(i, e)
    }

    #[test]
    fn contents() {
        let v = mc(4, &[0, 1]);
        assert_eq!(Node::new(1, 1, 0).content(&v), 0);
        assert_eq!(Node::new(2, 1, 0).content(&v), -1);
        assert_eq!(Node::new(2, 1, 0).residue(&v), r(3, 4));
        let v = mc(3, &[1, 2]);
        assert_eq!(Node::new(1, 1, 1).content(&v), 2);
        assert_eq!(Node::new(1, 1, 1).residue(&v), r(2, 3));
    }

    #[test]
    fn order() {
        let v = mc(3, &[1, 2]);
        assert!(precedes(&Node::new(1, 1, 1), &Node::new(1, 2, 0), &v).unwrap());
        assert!(!precedes(&Node::new(1, 2, 0), &Node::new(1, 1, 1), &v).unwrap());
        let n = Node::new(1, 1, 1);
        assert!(!precedes(&n, &n, &v).unwrap());
        let v = mc(2, &[0]);
        assert!(precedes(&Node::new(2, 1, 0), &Node::new(1, 2, 0), &v).unwrap());
        assert!(matches!(
            precedes(&Node::new(1, 1, 0), &Node::new(1, 2, 0), &v),
            Err(Error::ResidueMismatch(..))
        ));
    }

    #[test]
    fn signature_words() {
        let v = mc(2, &[0]);
        assert_eq!(signature_word(&MultiPartition::empty(1), r(0, 2), &v), vec![(Node::new(1, 1, 0), A)]);
        let v = mc(3, &[1, 2]);
        assert_eq!(
            signature_word(&mp(&[&[1], &[]]), r(2, 3), &v),
            vec![(Node::new(1, 1, 1), A), (Node::new(1, 2, 0), A)]
        );
        let v = mc(2, &[0]);
        assert_eq!(
            signature_word(&mp(&[&[2]]), r(1, 2), &v),
            vec![(Node::new(2, 1, 0), A), (Node::new(1, 2, 0), R)]
        );
    }

    #[test]
    fn ra_deletion() {
        let kinds = |w: &[(u8, NodeKind)]| ra_reduce(w).into_iter().map(|(_, k)| k).collect::<Vec<_>>();
        assert_eq!(kinds(&[(0, R), (1, A)]), vec![]);
        assert_eq!(kinds(&[(0, A), (1, R)]), vec![A, R]);
        assert_eq!(kinds(&[(0, R), (1, R), (2, A), (3, A)]), vec![]);
        assert_eq!(kinds(&[(0, A), (1, R), (2, R), (3, A), (4, R)]), vec![A, R, R]);
    }

    #[test]
    fn fock_crystal_examples() {
        let v = mc(3, &[1, 2]);
        let empty = MultiPartition::empty(2);
        let f = |l: &MultiPartition, i: i64| tilde_f_fock(l, r(i, 3), &v).unwrap();
        assert_eq!(f(&f(&empty, 1), 2), mp(&[&[2], &[]]));
        assert_eq!(f(&f(&empty, 2), 1), mp(&[&[1], &[1]]));
        for i in 0..3 {
            assert_eq!(tilde_e_fock(&empty, r(i, 3), &v), None);
        }
    }

    #[test]
    fn weights_and_strings() {
        let v = mc(3, &[1, 2]);
        assert_eq!(wt_fock(&MultiPartition::empty(2), &v), AffineWeight { lambda: vec![0, 1, 1], alpha: vec![0, 0, 0] });
        let l = mp(&[&[2], &[]]);
        let w = wt_fock(&l, &v);
        assert_eq!(w, AffineWeight { lambda: vec![0, 1, 1], alpha: vec![0, -1, -1] });
        assert_eq!(w.to_string(), "Λ_1 + Λ_2 - α_1 - α_2");
        assert_eq!(phi_fock(&mp(&[&[1], &[]]), r(2, 3), &v), 2);
    }

    #[test]
    fn transpose_and_enumeration() {
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(conjugate(&[]), Vec::<u32>::new());
        assert_eq!(partitions(5).len(), 7);
        // bipartitions of 4
        assert_eq!(MultiPartition::all_of_rank(2, 4).len(), 20);
        assert_eq!(MultiPartition::all_of_rank(3, 0), vec![MultiPartition::empty(3)]);
    }

    #[test]
    fn invalid_inputs() {
        assert!(Multicharge::new(3, vec![]).is_err());
        assert!(Multicharge::new(1, vec![0]).is_err());
        assert!(MultiPartition::new(vec![vec![1, 2]]).is_err());
        assert!(MultiPartition::new(vec![vec![2, 0]]).is_err());
        let err = serde_json::from_str::<MultiPartition>(r#"{"components":[[1,2]]}"#).unwrap_err();
        assert!(err.to_string().contains("components"));
    }

    #[test]
    fn json_forms() {
        let l = mp(&[&[2, 1], &[1]]);
        assert_eq!(serde_json::to_string(&l).unwrap(), r#"{"components":[[2,1],[1]]}"#);
        let v = mc(4, &[0, 1]);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"e":4,"charges":[0,1]}"#);
    }
}
