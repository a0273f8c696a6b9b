mod common;

use common::mc;
use modbranch::multipartition::{
    epsilon_fock, phi_fock, precedes, ra_reduce, signature_word, tilde_e_fock, tilde_f_fock, wt_fock, NodeKind,
};
use modbranch::{MultiPartition, Multicharge, Residue};
use proptest::prelude::*;

fn charges() -> Vec<Multicharge> {
    vec![
        mc(2, &[0]),
        mc(3, &[1]),
        mc(2, &[0, 0]),
        mc(2, &[0, 1]),
        mc(3, &[1, 2]),
        mc(3, &[2, 0]),
        mc(4, &[0, 5]),
        mc(3, &[0, 0, 0]),
        mc(4, &[0, 1, 3]),
        mc(3, &[-2, 4, 1]),
    ]
}

fn up_to(level: usize, n: u32) -> Vec<MultiPartition> {
    (0..=n).flat_map(|k| MultiPartition::all_of_rank(level, k)).collect()
}

#[test]
fn operators_are_mutually_inverse() {
    for v in charges() {
        let n = if v.level() == 3 { 5 } else { 7 };
        for lambda in up_to(v.level(), n) {
            for i in Residue::all(v.e()) {
                if let Some(up) = tilde_f_fock(&lambda, i, &v) {
                    assert_eq!(up.rank(), lambda.rank() + 1);
                    assert_eq!(tilde_e_fock(&up, i, &v), Some(lambda.clone()), "v = {v}, λ = {lambda}, i = {i}");
                }
                if let Some(down) = tilde_e_fock(&lambda, i, &v) {
                    assert_eq!(tilde_f_fock(&down, i, &v), Some(lambda.clone()), "v = {v}, λ = {lambda}, i = {i}");
                }
            }
        }
    }
}

#[test]
fn string_lengths_match_the_weight() {
    for v in charges() {
        for lambda in up_to(v.level(), 5) {
            let wt = wt_fock(&lambda, &v);
            for i in Residue::all(v.e()) {
                let (eps, phi) = (epsilon_fock(&lambda, i, &v), phi_fock(&lambda, i, &v));
                assert_eq!(phi as i64 - eps as i64, wt.pair_coroot(i), "v = {v}, λ = {lambda}, i = {i}");
                let mut steps = 0;
                let mut cur = lambda.clone();
                while let Some(next) = tilde_e_fock(&cur, i, &v) {
                    cur = next;
                    steps += 1;
                }
                assert_eq!(steps, eps);
                let mut steps = 0;
                let mut cur = lambda.clone();
                while let Some(next) = tilde_f_fock(&cur, i, &v) {
                    cur = next;
                    steps += 1;
                }
                assert_eq!(steps, phi);
            }
        }
    }
}

#[test]
fn signature_words_are_strictly_ordered() {
    for v in charges() {
        for lambda in up_to(v.level(), 6) {
            for i in Residue::all(v.e()) {
                let word = signature_word(&lambda, i, &v);
                for pair in word.windows(2) {
                    assert!(precedes(&pair[0].0, &pair[1].0, &v).unwrap(), "v = {v}, λ = {lambda}, i = {i}");
                }
            }
        }
    }
}

fn kinds() -> impl Strategy<Value = Vec<(usize, NodeKind)>> {
    prop::collection::vec(prop::bool::ANY, 0..20).prop_map(|bits| {
        bits.into_iter()
            .enumerate()
            .map(|(k, b)| (k, if b { NodeKind::A } else { NodeKind::R }))
            .collect()
    })
}

proptest! {
    #[test]
    fn ra_reduction_is_idempotent_with_a_before_r(word in kinds()) {
        let once = ra_reduce(&word);
        prop_assert_eq!(ra_reduce(&once), once.clone());
        let first_r = once.iter().position(|(_, k)| *k == NodeKind::R).unwrap_or(once.len());
        prop_assert!(once[first_r..].iter().all(|(_, k)| *k == NodeKind::R));
        let count = |w: &[(usize, NodeKind)], kind| w.iter().filter(|(_, k)| *k == kind).count() as i64;
        prop_assert_eq!(
            count(&word, NodeKind::A) - count(&word, NodeKind::R),
            count(&once, NodeKind::A) - count(&once, NodeKind::R)
        );
    }

    #[test]
    fn random_walks_invert(e in 2u32..=4, c0 in -3i64..6, c1 in -3i64..6, steps in prop::collection::vec(0u32..4, 0..12)) {
        let v = Multicharge::new(e, vec![c0, c1]).unwrap();
        let mut lambda = MultiPartition::empty(2);
        for s in steps {
            let i = Residue::new(s as i64, e);
            if let Some(up) = tilde_f_fock(&lambda, i, &v) {
                prop_assert_eq!(tilde_e_fock(&up, i, &v), Some(lambda.clone()));
                lambda = up;
            }
        }
    }
}
