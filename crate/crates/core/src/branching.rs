//! The modular branching rule at the level of labels, translation between
//! the labellings of simple modules, and crystal graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipartition::{MultiPartition, Multicharge};
use crate::multiseg::{Convention, Multisegment, Residue};
use crate::par::Exec;
use crate::realizations::{extract_path, f_v_embed, in_v_l, preimage_f_v, transport, Element, RealizationTag};

/// A label of a simple module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SimpleLabel {
    /// `D_ψ`, with `ψ` aperiodic and read in the tail convention.
    Mseg { mseg: Multisegment },
    /// `D̃^λ` for an Uglov multipartition of multicharge `v`.
    Uglov { lambda: MultiPartition, charges: Multicharge },
    /// `D^λ` for a Kleshchev multipartition.
    Kleshchev { lambda: MultiPartition, charges: Multicharge },
}

/// Target labelling for [`label_translate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LabelKind {
    Mseg,
    Uglov(Multicharge),
    Kleshchev(Multicharge),
}

fn tail(e: u32) -> RealizationTag {
    RealizationTag::Multisegment { e, conv: Convention::Tail }
}

impl SimpleLabel {
    fn realization(&self) -> (RealizationTag, Element) {
        match self {
            SimpleLabel::Mseg { mseg } => (tail(mseg.e()), Element::Mseg(mseg.clone())),
            SimpleLabel::Uglov { lambda, charges } => {
                (RealizationTag::Uglov(charges.clone()), Element::Partition(lambda.clone()))
            }
            SimpleLabel::Kleshchev { lambda, charges } => {
                (RealizationTag::Kleshchev(charges.clone()), Element::Partition(lambda.clone()))
            }
        }
    }

    /// Checks the label's invariant: aperiodic multisegment, or a
    /// multipartition in the component of `∅`.
    pub fn validate(&self) -> Result<()> {
        if let SimpleLabel::Mseg { mseg } = self {
            return mseg.check_aperiodic();
        }
        let (tag, x) = self.realization();
        extract_path(&x, &tag).map(|_| ())
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleLabel::Mseg { mseg } => write!(f, "D_{}", mseg.to_tail_string()),
            SimpleLabel::Uglov { lambda, charges } => write!(f, "D~^{lambda} [v = {charges}]"),
            SimpleLabel::Kleshchev { lambda, charges } => write!(f, "D^{lambda} [v = {charges}]"),
        }
    }
}

/// Socle of the `i`-restriction of `D_ψ`: the label `ẽ_i ψ`, or `None` when
/// the `i`-restriction is zero.
pub fn branching_socle(psi: &Multisegment, i: Residue) -> Result<Option<Multisegment>> {
    psi.tilde_e(i, Convention::Tail)
}

/// [`branching_socle`] for every residue.
pub fn restriction_profile(psi: &Multisegment) -> Result<BTreeMap<Residue, Option<Multisegment>>> {
    Residue::all(psi.e()).map(|i| Ok((i, branching_socle(psi, i)?))).collect()
}

/// Rewrites a label in another labelling of the same simple module.
pub fn label_translate(label: &SimpleLabel, target: &LabelKind) -> Result<SimpleLabel> {
    label.validate()?;
    let (src, x) = label.realization();
    match target {
        LabelKind::Mseg => {
            let mseg = match label {
                SimpleLabel::Mseg { mseg } => mseg.clone(),
                SimpleLabel::Uglov { lambda, charges } if in_v_l(charges) => f_v_embed(lambda, charges)?,
                _ => into_mseg(transport(&x, &src, &tail(src.e()))?)?,
            };
            Ok(SimpleLabel::Mseg { mseg })
        }
        LabelKind::Uglov(v) => {
            let lambda = match label {
                SimpleLabel::Mseg { mseg } if in_v_l(v) => {
                    preimage_f_v(mseg, v)?.ok_or_else(|| Error::NotCyclotomic(mseg.to_tail_string()))?
                }
                _ => into_partition(transport(&x, &src, &RealizationTag::Uglov(v.clone()))?)?,
            };
            Ok(SimpleLabel::Uglov { lambda, charges: v.clone() })
        }
        LabelKind::Kleshchev(v) => {
            let lambda = into_partition(transport(&x, &src, &RealizationTag::Kleshchev(v.clone()))?)?;
            Ok(SimpleLabel::Kleshchev { lambda, charges: v.clone() })
        }
    }
}

fn into_mseg(x: Element) -> Result<Multisegment> {
    x.as_mseg().cloned().ok_or_else(|| Error::Internal(format!("expected a multisegment, got {x}")))
}

fn into_partition(x: Element) -> Result<MultiPartition> {
    x.as_partition().cloned().ok_or_else(|| Error::Internal(format!("expected a multipartition, got {x}")))
}

/// Vertices reachable from `∅` by `f̃`, up to a given rank, with the
/// `f̃_i` edges between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    pub realization: RealizationTag,
    pub vertices: Vec<Element>,
    /// `(src, i, dst)` with `f̃_i(vertices[src]) = vertices[dst]`
    pub edges: Vec<(usize, Residue, usize)>,
}

/// Breadth-first closure of `∅` under all `f̃_i` up to rank `depth`.
/// Vertices are sorted by rank, then by their JSON form.
pub fn crystal_graph(tag: &RealizationTag, depth: u32, exec: Exec) -> Result<CrystalGraph> {
    let e = tag.e();
    let mut layers: Vec<Vec<Element>> = vec![vec![tag.empty()]];
    let mut raw_edges: Vec<(Element, Residue, Element)> = Vec::new();
    for _ in 0..depth {
        let layer = layers.last().unwrap();
        let steps = exec.map(layer, |x| -> Result<Vec<(Element, Residue, Element)>> {
            let mut out = Vec::new();
            for i in Residue::all(e) {
                if let Some(y) = tag.tilde_f(x, i)? {
                    out.push((x.clone(), i, y));
                }
            }
            Ok(out)
        });
        let mut next = BTreeSet::new();
        for s in steps {
            for (x, i, y) in s? {
                next.insert(y.clone());
                raw_edges.push((x, i, y));
            }
        }
        layers.push(next.into_iter().collect());
    }
    let key = |x: &Element| (x.rank(), serde_json::to_string(x).expect("elements serialize"));
    let mut vertices: Vec<Element> = layers.into_iter().flatten().collect();
    vertices.sort_by_key(key);
    vertices.dedup();
    let index: BTreeMap<&Element, usize> = vertices.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let mut edges: Vec<(usize, Residue, usize)> =
        raw_edges.iter().map(|(x, i, y)| (index[x], *i, index[y])).collect();
    edges.sort();
    Ok(CrystalGraph { realization: tag.clone(), vertices, edges })
}

#[derive(Serialize)]
struct GraphJson<'a> {
    vertices: &'a [Element],
    edges: Vec<(usize, u32, usize)>,
}

impl CrystalGraph {
    fn vertex_text(&self, x: &Element) -> String {
        match &self.realization {
            RealizationTag::Multisegment { conv, .. } => x.to_text(*conv),
            _ => x.to_text(Convention::Tail),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (k, x) in self.vertices.iter().enumerate() {
            let label = self.vertex_text(x).replace('\\', "\\\\").replace('"', "\\\"");
            s.push_str(&format!("  n{k} [label=\"{label}\"];\n"));
        }
        for (a, i, b) in &self.edges {
            s.push_str(&format!("  n{a} -> n{b} [label=\"{i}\"];\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GraphJson {
            vertices: &self.vertices,
            edges: self.edges.iter().map(|&(a, i, b)| (a, i.value(), b)).collect(),
        })
        .expect("graph serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (a, i, b) in &self.edges {
            s.push_str(&format!(
                "{} --{i}--> {}\n",
                self.vertex_text(&self.vertices[*a]),
                self.vertex_text(&self.vertices[*b])
            ));
        }
        s
    }

    /// Number of vertices of each rank.
    pub fn rank_counts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for x in &self.vertices {
            let r = x.rank() as usize;
            if out.len() <= r {
                out.resize(r + 1, 0);
            }
            out[r] += 1;
        }
        out
    }
}
