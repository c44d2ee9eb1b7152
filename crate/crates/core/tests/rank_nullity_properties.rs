use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use rankring::chow::{graded_rank, permutahedral_ring, ChowElement};
use rankring::corpus;
use rankring::matroid::Matroid;
use rankring::rank_nullity::{
    chern_membership_check, degree1_relation_census, generators_are_invariant, lefschetz_check,
    rn_generators, rn_hilbert, top_degree_witness, within_ambient, RankNullityRing,
};

fn full_corpus() -> &'static [Matroid] {
    static CORPUS: OnceLock<Vec<Matroid>> = OnceLock::new();
    CORPUS.get_or_init(|| corpus::corpus().unwrap())
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

#[test]
fn relation_census_holds_on_the_corpus() {
    for m in full_corpus() {
        let census = degree1_relation_census(m).unwrap();
        assert!(census.holds(), "{m:?}: {census:?}");
        assert_eq!(census.generators - census.rank, if census.free_plus_loops { 2 } else { 1 });
    }
}

#[test]
fn free_plus_loops_loses_two() {
    let m = Matroid::direct_sum(&Matroid::uniform(2, 2).unwrap(), &Matroid::uniform(0, 2).unwrap()).unwrap();
    let census = degree1_relation_census(&m).unwrap();
    assert!(census.free_plus_loops);
    assert_eq!(census.generators - census.rank, 2);
}

#[test]
fn hilbert_vectors_are_bounded_and_monotone() {
    for m in full_corpus() {
        let n = m.n();
        let h = rn_hilbert(m).unwrap();
        assert_eq!(h.values.len(), n);
        assert_eq!(h.values[0], 1);
        assert_eq!(h.values[n - 1], 1, "{m:?}");
        assert!(within_ambient(&h, &permutahedral_ring(n).unwrap()).unwrap());
        assert!(h.values[..=n / 2].windows(2).all(|w| w[0] <= w[1]), "{m:?}: {h}");
        assert!(lefschetz_check(m).unwrap(), "{m:?}");
    }
}

#[test]
fn top_degree_witness_is_factorial() {
    for m in full_corpus() {
        assert_eq!(top_degree_witness(m).unwrap(), factorial(m.n()), "{m:?}");
    }
}

#[test]
fn generators_are_automorphism_invariant() {
    for m in full_corpus() {
        assert!(generators_are_invariant(m).unwrap(), "{m:?}");
    }
}

#[test]
fn chern_classes_lie_in_the_subring() {
    for m in full_corpus().iter().filter(|m| m.n() <= 5) {
        let rn = RankNullityRing::new(m).unwrap();
        assert!(chern_membership_check(&rn).unwrap(), "{m:?}");
    }
}

#[test]
fn non_members_are_rejected() {
    let m = Matroid::uniform(2, 3).unwrap();
    let rn = RankNullityRing::new(&m).unwrap();
    let x1 = ChowElement::generator(rn.ring(), 0b001).unwrap();
    assert!(!rn.contains(&x1).unwrap());
}

/// Spans every degree-`d` product of generators directly.
fn brute_force_hilbert(m: &Matroid) -> Vec<usize> {
    let ring = permutahedral_ring(m.n()).unwrap();
    let gens: Vec<ChowElement> = rn_generators(m).unwrap().into_iter().map(|g| g.element).collect();
    let mut level = vec![ChowElement::one(&ring)];
    let mut out = vec![1];
    for d in 1..m.n() {
        let mut next = Vec::new();
        for a in &level {
            for g in &gens {
                next.push(a.mul(g).unwrap());
            }
        }
        out.push(graded_rank(&next, d).unwrap());
        level = next;
    }
    out
}

#[test]
fn hilbert_matches_brute_force_products() {
    for n in 1..=4 {
        for m in corpus::isomorphism_classes(n).unwrap() {
            assert_eq!(rn_hilbert(&m).unwrap().values, brute_force_hilbert(&m), "{m:?}");
        }
    }
}

#[test]
fn uniform_hilbert_is_rank_independent() {
    for n in 1..=6 {
        let expected: Vec<usize> = (0..n)
            .map(|d| rankring::tautological::binomial(n as i64 - 1, d as i64).to_usize().unwrap())
            .collect();
        for r in 0..=n {
            assert_eq!(rn_hilbert(&Matroid::uniform(r, n).unwrap()).unwrap().values, expected);
        }
    }
}
