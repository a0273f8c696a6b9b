#![allow(dead_code)]

use modbranch::{Multicharge, MultiPartition, Multisegment, Residue};

pub fn mc(e: u32, c: &[i64]) -> Multicharge {
    Multicharge::new(e, c.to_vec()).unwrap()
}

pub fn mp(c: &[&[u32]]) -> MultiPartition {
    MultiPartition::new(c.iter().map(|p| p.to_vec()).collect()).unwrap()
}

pub fn r(i: i64, e: u32) -> Residue {
    Residue::new(i, e)
}

/// `e ∈ {2,3,4}`, `l ∈ {1,2}`, every `v ∈ V_l` with `v_0 = 0`.
pub fn charge_grid() -> Vec<Multicharge> {
    let mut out = Vec::new();
    for e in 2..=4u32 {
        out.push(mc(e, &[0]));
        for v1 in 0..e as i64 {
            out.push(mc(e, &[0, v1]));
        }
    }
    out
}

/// Every multisegment of size at most `n`.
pub fn all_up_to(e: u32, n: u32) -> Vec<Multisegment> {
    (0..=n).flat_map(|k| Multisegment::all_of_size(e, k)).collect()
}

/// Parses `E_{{[1;2]}} + vE_{{[1;1],[2;1]}} + v^2E_{{...}}` (whitespace
/// ignored) into (exponent, head/length pairs) terms.
pub fn parse_pbw_terms(s: &str) -> Vec<(i32, Vec<(i64, u32)>)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    s.split('+')
        .map(|term| {
            let (coeff, basis) = term.split_at(term.find('E').expect("term has a basis element"));
            let k = match coeff {
                "" => 0,
                "v" => 1,
                c => c.strip_prefix("v^").and_then(|x| x.parse().ok()).expect("coefficient v^k"),
            };
            let inner = basis
                .strip_prefix("E_{{[")
                .and_then(|b| b.strip_suffix("]}}"))
                .expect("basis element E_{{...}}");
            let segs = inner
                .split("],[")
                .map(|seg| {
                    let (i, l) = seg.split_once(';').expect("segment i;l");
                    (i.parse().unwrap(), l.parse().unwrap())
                })
                .collect();
            (k, segs)
        })
        .collect()
}
