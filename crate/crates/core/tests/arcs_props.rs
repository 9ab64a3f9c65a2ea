use std::collections::BTreeSet;

use num_bigint::BigInt;
use tightcensus_core::arcs::{annulus_count, disk_count, enumerate_matchings, ArcProblem};
use tightcensus_oracles::{brute_annulus, brute_disk};

#[test]
fn disk_enumeration_matches_closed_form_and_brute_force() {
    let want = [1, 2, 6, 20, 70];
    for n in 0..=4u32 {
        let list = enumerate_matchings(ArcProblem::PuncturedDisk(n)).unwrap();
        assert_eq!(list.len(), want[n as usize]);
        assert_eq!(disk_count(n), BigInt::from(want[n as usize]));
        assert_eq!(brute_disk(n), want[n as usize]);
    }
}

#[test]
fn annulus_enumeration_matches_closed_form_and_brute_force() {
    for total in 0..=5u32 {
        for n0 in 0..=total {
            let n1 = total - n0;
            let list = enumerate_matchings(ArcProblem::Annulus(n0, n1)).unwrap();
            let brute = brute_annulus(n0, n1);
            assert_eq!(BigInt::from(list.len()), annulus_count(n0, n1), "({n0}, {n1})");
            assert_eq!(list.len(), brute, "({n0}, {n1})");
            let distinct: BTreeSet<_> = list.iter().collect();
            assert_eq!(distinct.len(), list.len());
            for m in &list {
                assert!(m.crossing.iter().any(|&c| c));
                assert_eq!(m.pairs.len() as u32, n0 + n1);
            }
        }
    }
}

#[test]
fn annulus_count_is_symmetric() {
    for n0 in 0..=20 {
        for n1 in 0..=20 {
            assert_eq!(annulus_count(n0, n1), annulus_count(n1, n0));
        }
    }
    assert_eq!(annulus_count(0, 3), BigInt::from(0));
    assert_eq!(annulus_count(1, 1), BigInt::from(2));
    assert_eq!(annulus_count(2, 1), BigInt::from(8));
}

#[test]
fn disk_families_biject_with_half_subsets() {
    for n in 0..=6u32 {
        let list = enumerate_matchings(ArcProblem::PuncturedDisk(n)).unwrap();
        let chosen: BTreeSet<BTreeSet<u32>> = list.iter().map(|m| m.chosen_points(n).unwrap()).collect();
        assert_eq!(chosen.len(), list.len());
        assert!(chosen.iter().all(|s| s.len() == n as usize));
        assert_eq!(BigInt::from(chosen.len()), disk_count(n));
    }
}

#[test]
fn enumeration_guard() {
    assert!(enumerate_matchings(ArcProblem::PuncturedDisk(7)).is_err());
    assert!(enumerate_matchings(ArcProblem::Annulus(4, 3)).is_err());
    assert!(enumerate_matchings(ArcProblem::Annulus(3, 3)).is_ok());
}
