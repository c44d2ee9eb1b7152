use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;

use rankring::corpus;
use rankring::matroid::Matroid;
use rankring::tautological::{
    alpha, balancing_check, bergman_class, ch_class, ch_class_via_pullback, chern_closed_form,
    compare_chern_routes, csm_weights, matroid_ring, staircase_polynomial, whitney_check, ChernSide,
};

fn small() -> &'static [Matroid] {
    static SMALL: OnceLock<Vec<Matroid>> = OnceLock::new();
    SMALL.get_or_init(|| {
        (1..=5)
            .flat_map(|n| corpus::isomorphism_classes(n).unwrap())
            .collect()
    })
}

fn loopless() -> Vec<&'static Matroid> {
    small().iter().filter(|m| m.is_loopless()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn three_routes_agree_on_sampled_matroids(pick in 0usize..10_000, k in 0usize..5, sub in any::<bool>()) {
        let m = &small()[pick % small().len()];
        let k = k.min(m.n() - 1);
        let side = if sub { ChernSide::Sub } else { ChernSide::Quot };
        let cmp = compare_chern_routes(m, side, k).unwrap();
        prop_assert!(cmp.agree(), "{:?} {} k={}", m, side, k);
    }

    #[test]
    fn alpha_depends_only_on_rank_sequence(pick in 0usize..10_000, k in 1usize..5, sub in any::<bool>()) {
        let m = &small()[pick % small().len()];
        let side = if sub { ChernSide::Sub } else { ChernSide::Quot };
        let c = chern_closed_form(m, side, k).unwrap();
        let mut seen: BTreeMap<(Vec<usize>, Vec<u32>), BigInt> = BTreeMap::new();
        for (mono, coeff) in c.terms() {
            let values: Vec<usize> = mono.chain().map(|s| side.value(m, s)).collect();
            let powers: Vec<u32> = mono.factors().iter().map(|&(_, p)| p).collect();
            prop_assert_eq!(coeff, &alpha(&values, &powers));
            let prev = seen.entry((values, powers)).or_insert_with(|| coeff.clone());
            prop_assert_eq!(&*prev, coeff);
        }
    }
}

#[test]
fn whitney_sum_is_trivial_on_the_corpus() {
    for m in small() {
        assert!(whitney_check(m).unwrap(), "{m:?}");
    }
    assert!(whitney_check(&corpus::mk4().unwrap()).unwrap());
}

#[test]
fn chern_classes_vanish_above_their_range() {
    for m in small() {
        for side in ChernSide::BOTH {
            for k in side.max_degree(m) + 1..m.n() {
                let c = chern_closed_form(m, side, k).unwrap();
                assert!(c.normal_form().unwrap().is_zero(), "{m:?} {side} k={k}");
            }
        }
    }
}

#[test]
fn ch_matches_pullback_and_staircase() {
    for m in loopless() {
        let ring = matroid_ring(m).unwrap();
        let stair = staircase_polynomial(&ring).unwrap();
        for k in 0..=ring.top_degree() {
            let ch = ch_class(&ring, k).unwrap();
            assert!(ch.equals_in_ring(&ch_class_via_pullback(&ring, k).unwrap()).unwrap(), "{m:?} k={k}");
            assert!(ch.equals_in_ring(&stair[k]).unwrap(), "{m:?} k={k}");
        }
        for extra in &stair[ring.top_degree() + 1..] {
            assert!(extra.normal_form().unwrap().is_zero(), "{m:?}");
        }
    }
}

#[test]
fn csm_weights_are_balanced() {
    let mut all: Vec<Matroid> = loopless().into_iter().cloned().collect();
    all.push(corpus::mk4().unwrap());
    all.push(corpus::m4().unwrap());
    for m in &all {
        let ring = matroid_ring(m).unwrap();
        let top = csm_weights(&ring, 0).unwrap();
        assert!(top.is_all_ones(), "{m:?}");
        assert_eq!(top, bergman_class(&ring).unwrap());
        for k in 0..=ring.top_degree() {
            assert!(balancing_check(&csm_weights(&ring, k).unwrap()), "{m:?} k={k}");
        }
    }
}

#[test]
fn flipped_bergman_weight_is_unbalanced() {
    let ring = matroid_ring(&Matroid::uniform(3, 4).unwrap()).unwrap();
    let mut w = bergman_class(&ring).unwrap();
    let first = w.weights.keys().next().unwrap().clone();
    w.weights.insert(first, BigInt::from(2));
    assert!(!balancing_check(&w));
}
