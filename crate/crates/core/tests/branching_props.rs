mod common;

use std::collections::BTreeSet;

use common::{charge_grid, mc};
use modbranch::branching::{crystal_graph, label_translate, restriction_profile, CrystalGraph, LabelKind, SimpleLabel};
use modbranch::realizations::{enumerate_flotw, transport, Element, RealizationTag};
use modbranch::{Convention, Exec, Multisegment, Residue};

#[test]
fn restriction_profiles_follow_epsilon() {
    for e in 2..=4 {
        for n in 0..=5 {
            for psi in Multisegment::all_aperiodic_of_size(e, n) {
                let profile = restriction_profile(&psi).unwrap();
                let live = profile.values().filter(|x| x.is_some()).count();
                let want = Residue::all(e).filter(|&i| psi.epsilon(i, Convention::Tail) > 0).count();
                assert_eq!(live, want, "{psi}");
                for socle in profile.values().flatten() {
                    assert_eq!(socle.size() + 1, psi.size());
                }
            }
        }
    }
}

/// Maps every vertex of `a` into `b` by transport and checks the labelled
/// edge sets agree.
fn assert_isomorphic(a: &CrystalGraph, b: &CrystalGraph) {
    let image: Vec<Element> = a
        .vertices
        .iter()
        .map(|x| transport(x, &a.realization, &b.realization).unwrap())
        .collect();
    let bset: BTreeSet<&Element> = b.vertices.iter().collect();
    assert_eq!(image.iter().collect::<BTreeSet<_>>(), bset, "{} vs {}", a.realization, b.realization);
    let index = |x: &Element| b.vertices.iter().position(|y| y == x).unwrap();
    let mut mapped: Vec<(usize, Residue, usize)> =
        a.edges.iter().map(|&(s, i, t)| (index(&image[s]), i, index(&image[t]))).collect();
    mapped.sort();
    assert_eq!(mapped, b.edges, "{} vs {}", a.realization, b.realization);
}

#[test]
fn realizations_of_one_weight_have_isomorphic_graphs() {
    for v in charge_grid() {
        let depth = if v.level() == 1 { 8 } else { 6 };
        let uglov = crystal_graph(&RealizationTag::Uglov(v.clone()), depth, Exec::default()).unwrap();
        let flotw = crystal_graph(&RealizationTag::Flotw(v.clone()), depth, Exec::default()).unwrap();
        let klesh = crystal_graph(&RealizationTag::Kleshchev(v.clone()), depth, Exec::default()).unwrap();
        assert_eq!(uglov, CrystalGraph { realization: uglov.realization.clone(), ..flotw.clone() });
        assert_isomorphic(&uglov, &klesh);
        assert_isomorphic(&klesh, &uglov);
        let rotated = crystal_graph(&RealizationTag::Uglov(v.tau()), depth, Exec::default()).unwrap();
        assert_isomorphic(&uglov, &rotated);
    }
}

#[test]
fn vertex_counts_are_flotw_counts() {
    for v in charge_grid() {
        let g = crystal_graph(&RealizationTag::Flotw(v.clone()), 7, Exec::default()).unwrap();
        let want: Vec<usize> = (0..=7).map(|n| enumerate_flotw(&v, n, Exec::default()).unwrap().len()).collect();
        assert_eq!(g.rank_counts(), want, "v = {v}");
    }
}

#[test]
fn labels_translate_back_and_forth() {
    for v in charge_grid() {
        for n in 0..=6 {
            for lambda in enumerate_flotw(&v, n, Exec::default()).unwrap() {
                let label = SimpleLabel::Uglov { lambda, charges: v.clone() };
                let mseg = label_translate(&label, &LabelKind::Mseg).unwrap();
                assert_eq!(label_translate(&mseg, &LabelKind::Uglov(v.clone())).unwrap(), label);
                let k = label_translate(&label, &LabelKind::Kleshchev(v.clone())).unwrap();
                assert_eq!(label_translate(&k, &LabelKind::Uglov(v.clone())).unwrap(), label);
                assert_eq!(label_translate(&k, &LabelKind::Mseg).unwrap(), mseg);
                let s = serde_json::to_string(&k).unwrap();
                assert_eq!(serde_json::from_str::<SimpleLabel>(&s).unwrap(), k);
            }
        }
    }
}

#[test]
fn labels_outside_the_cyclotomic_quotient_are_rejected() {
    let v = mc(3, &[1]);
    let mseg = SimpleLabel::Mseg { mseg: Multisegment::from_tails(3, &[(1, 1), (1, 2)]) };
    assert!(label_translate(&mseg, &LabelKind::Uglov(v.clone())).is_err());
    assert!(label_translate(&mseg, &LabelKind::Kleshchev(v)).is_err());
}
