mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use tightcensus_core::gamma::{
    euler_from_retournement, gamma, gamma_of, gamma_value_count, gamma_values_exhaustive, retournement_candidates,
    xu_xv, OrderedSubset, Parity,
};
use tightcensus_core::sail::{dual_sail, sail_points, IVec2, LatticeCone, PrimVec};
use tightcensus_oracles::RatCone;

/// Union of the facets of the interior dual points, in order, with the
/// dual point owning each step between consecutive entries.
fn facet_segment(c: &RatCone) -> Option<(Vec<PrimVec>, Vec<(PrimVec, i64)>)> {
    let ds = dual_sail(&to_kernel(c), 200).unwrap();
    if !ds.complete {
        return None;
    }
    let mut pts: Vec<PrimVec> = Vec::new();
    let mut owner = Vec::new();
    for d in &ds.interior {
        for (j, f) in d.facets.iter().enumerate() {
            if j == 0 && pts.last() == Some(f) {
                continue;
            }
            if j > 0 {
                owner.push((d.point, d.weight()));
            }
            pts.push(*f);
        }
    }
    Some((pts, owner))
}

fn subset(points: &[PrimVec], mask: u64) -> Vec<PrimVec> {
    points.iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, p)| *p).collect()
}

fn apply(m: [[i64; 2]; 2], v: IVec2) -> IVec2 {
    IVec2::new(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y)
}

fn sl2_small() -> impl Strategy<Value = [[i64; 2]; 2]> {
    (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3)
        .prop_filter("determinant 1", |(a, b, c, d)| a * d - b * c == 1)
        .prop_map(|(a, b, c, d)| [[a, b], [c, d]])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parities_give_equal_counts(c in open_cone(12)) {
        let (pts, owner) = facet_segment(&c).unwrap_or_else(|| panic!("incomplete dual sail for {c:?}"));
        let even = gamma_value_count(&pts, Parity::Even).unwrap();
        let odd = gamma_value_count(&pts, Parity::Odd).unwrap();
        if !pts.is_empty() {
            prop_assert_eq!(even.count, odd.count);
        }
        let mut weights: Vec<(PrimVec, i64)> = owner.clone();
        weights.dedup();
        let prod: usize = weights.iter().map(|(_, a)| (*a - 1) as usize).product();
        prop_assert_eq!(even.count, prod);
    }

    #[test]
    fn even_gamma_is_a_dual_combination(c in open_cone(12), mask in any::<u64>()) {
        let (pts, owner) = facet_segment(&c).unwrap_or_else(|| panic!("incomplete dual sail for {c:?}"));
        let mut q = subset(&pts, mask);
        if q.len() % 2 == 1 {
            q.pop();
        }
        let idx: Vec<usize> = q.iter().map(|p| pts.iter().position(|x| x == p).unwrap()).collect();
        // Steps covered by the intervals [q_1, q_2], [q_3, q_4], ...
        let mut b: Vec<(PrimVec, i64, i64)> = Vec::new();
        for (k, &(w, a)) in owner.iter().enumerate() {
            let step = pts[k].vec() - pts[k + 1].vec();
            prop_assert_eq!(step, -w.vec());
            let covered = idx.chunks(2).any(|pr| pr[0] <= k && k < pr[1]);
            match b.last_mut() {
                Some(last) if last.0 == w => last.2 += covered as i64,
                _ => b.push((w, a, covered as i64)),
            }
        }
        let mut sum = IVec2::ZERO;
        for &(w, a, bi) in &b {
            prop_assert!(0 <= bi && bi <= a - 2);
            sum = sum - bi * w.vec();
        }
        prop_assert_eq!(gamma_of(&q).unwrap(), sum);
    }

    #[test]
    fn sweep_matches_exhaustive_enumeration(c in rat_cone(15), window in 5u64..=30) {
        let s = sail_points(&to_kernel(&c), window).unwrap();
        let pts: Vec<PrimVec> = s.points.iter().copied().take(14).collect();
        for parity in [Parity::Even, Parity::Odd] {
            let dp = gamma_value_count(&pts, parity).unwrap();
            let ex = gamma_values_exhaustive(&pts, parity, 24).unwrap();
            prop_assert_eq!(&dp, &ex);
            let mut brute = BTreeSet::new();
            for mask in 0u64..(1 << pts.len()) {
                if (mask.count_ones() % 2 == 0) == (parity == Parity::Even) {
                    brute.insert(gamma_of(&subset(&pts, mask)).unwrap());
                }
            }
            prop_assert_eq!(&dp.values, &brute);
        }
    }

    #[test]
    fn hull_and_gamma_commute_with_sl2(c in closed_cone(6), m in sl2_small()) {
        let k = to_kernel(&c);
        let s = sail_points(&k, 200).unwrap();
        prop_assume!(s.complete);
        let image = |v: (i64, i64)| { let w = apply(m, ivec(v)); (w.x, w.y) };
        let mc = LatticeCone::rational(image(c.left), true, image(c.right), true).unwrap();
        let ms = sail_points(&mc, 400).unwrap();
        prop_assert!(ms.complete);
        let mapped: Vec<IVec2> = s.points.iter().map(|p| apply(m, p.vec())).collect();
        let got: Vec<IVec2> = ms.points.iter().map(|p| p.vec()).collect();
        prop_assert_eq!(&got, &mapped);
        let q = OrderedSubset::new(ms.points.clone()).unwrap();
        prop_assert_eq!(gamma(&q).unwrap(), apply(m, gamma_of(&s.points).unwrap()));
    }

    #[test]
    fn endpoint_and_interior_classes_are_disjoint(c in closed_cone(8)) {
        let s = sail_points(&to_kernel(&c), 100).unwrap();
        prop_assume!(s.complete && s.points.len() <= 20);
        let sets = xu_xv(&s).unwrap();
        prop_assert!(sets.xu.contains(&IVec2::ZERO));
        prop_assert!(sets.xu.len() <= 4);
        prop_assert!(sets.xu.is_disjoint(&sets.xv), "{:?} {:?}", sets.xu, sets.xv);
        for v in sets.xu.iter().chain(&sets.xv) {
            prop_assert!(v.x % 2 == 0 && v.y % 2 == 0);
        }
    }

    #[test]
    fn candidates_contain_the_source_subset(c in rat_cone(10), mask in any::<u64>(), window in 4u64..=20) {
        let s = sail_points(&to_kernel(&c), window).unwrap();
        prop_assume!(s.points.len() <= 14);
        let q = subset(&s.points, mask);
        let chi = euler_from_retournement(&OrderedSubset::new(q.clone()).unwrap()).unwrap();
        let found = retournement_candidates(&s, chi, 24).unwrap();
        prop_assert!(found.subsets.iter().any(|r| r.points() == q.as_slice()));
        let mut brute = BTreeSet::new();
        for m in 0u64..(1 << s.points.len()) {
            let r = subset(&s.points, m);
            let g = gamma_of(&r).unwrap();
            if IVec2::new(2 * g.x, 2 * g.y) == chi {
                brute.insert(r);
            }
        }
        let got: BTreeSet<Vec<PrimVec>> = found.subsets.iter().map(|r| r.points().to_vec()).collect();
        prop_assert_eq!(got, brute);
    }
}

#[test]
fn quadrant_classes() {
    let c = LatticeCone::rational((0, 1), true, (1, 0), true).unwrap();
    let s = sail_points(&c, 10).unwrap();
    let sets = xu_xv(&s).unwrap();
    let want: BTreeSet<IVec2> = [(0, 0), (0, 2), (2, 0), (-2, 2)].into_iter().map(ivec).collect();
    assert_eq!(sets.xu, want);
    assert!(sets.xv.is_empty());
    let found = retournement_candidates(&s, IVec2::new(-2, 2), 24).unwrap();
    assert_eq!(found.subsets.len(), 1);
    assert_eq!(found.subsets[0].points(), &[pv(0, 1), pv(1, 0)]);
    assert_eq!(gamma_of(&[pv(0, 1), pv(1, 1)]).unwrap(), IVec2::new(-1, 0));
}

#[test]
fn seven_thirds_even_count() {
    let c = RatCone { left: (0, 1), left_closed: false, right: (7, 3), right_closed: false };
    let s = sail_points(&to_kernel(&c), 20).unwrap();
    let bhat = tightcensus_core::sail::finite_edge_points(&s, None);
    assert_eq!(gamma_value_count(&bhat.points, Parity::Even).unwrap().count, 2);
    assert_eq!(gamma_value_count(&[], Parity::Even).unwrap().count, 1);
    assert_eq!(gamma_value_count(&[], Parity::Odd).unwrap().count, 0);
}
