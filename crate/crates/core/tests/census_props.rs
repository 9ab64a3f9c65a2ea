mod common;

use std::collections::BTreeSet;

use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use tightcensus_core::arith::Sl2Mat;
use tightcensus_core::census::{
    bundle_census, lens_census, lens_two_path, solid_torus_census, thick_torus_census, NValue, SuspensionSpec,
};
use tightcensus_core::gamma::{gamma_of, gamma_value_count, Parity};
use tightcensus_core::sail::{finite_edge_points, sail_points, Direction, IVec2, LatticeCone};
use tightcensus_oracles::{additive_order, gcd};

fn coprime_pairs(max: i64) -> impl Iterator<Item = (i64, i64)> {
    (2..=max).flat_map(|p| (1..p).filter(move |&q| gcd(p, q) == 1).map(move |q| (p, q)))
}

#[test]
fn lens_count_two_ways_up_to_40() {
    for (p, q) in coprime_pairs(40) {
        let t = lens_two_path(p, q).unwrap();
        assert!(t.complete, "{p}/{q}");
        assert_eq!(t.formula, t.geometric, "{p}/{q}");
    }
}

#[test]
fn lens_invariants_up_to_40() {
    for (p, q) in coprime_pairs(40) {
        let r = lens_census(p, q).unwrap();
        let count = r.oriented_count.to_usize().unwrap();
        assert_eq!(r.homotopy_invariants.len(), count, "{p}/{q}");
        assert_eq!(r.homology_order, BigInt::from(p));
        assert!(r.homology.is_cyclic());
        let g0 = r.homology.generator_images[0][0].to_i64().unwrap();
        assert_eq!(additive_order(g0, p), p);
        for (i, img) in r.homology.generator_images.iter().enumerate() {
            let want = (r.mu_images[i].to_i64().unwrap() * g0).rem_euclid(p);
            assert_eq!(img[0].to_i64().unwrap(), want, "{p}/{q} mu_{i}");
        }
        // Reversing every stabilization choice negates the Euler class.
        let pb = BigInt::from(p);
        for e in &r.euler_classes {
            let neg = (-e).mod_floor(&pb);
            assert!(r.euler_classes.contains(&neg), "{p}/{q}: {e}");
        }
        let unoriented = (count + 1) / 2;
        assert_eq!(r.unoriented_count, BigInt::from(unoriented));
        assert_eq!(r.universally_tight_oriented, if q == p - 1 { 1 } else { 2 });
    }
}

#[test]
fn lens_loci_have_even_cardinality() {
    for (p, q) in coprime_pairs(30) {
        let c = LatticeCone::rational((0, 1), false, (p, q), false).unwrap();
        let s = sail_points(&c, p.max(2) as u64).unwrap();
        let bhat = finite_edge_points(&s, None);
        if bhat.points.len() > 16 {
            continue;
        }
        let even = gamma_value_count(&bhat.points, Parity::Even).unwrap().values;
        let n = bhat.points.len();
        for mask in 0u32..(1 << n) {
            let q_pts: Vec<_> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| bhat.points[i]).collect();
            if even.contains(&gamma_of(&q_pts).unwrap()) {
                assert_eq!(q_pts.len() % 2, 0, "{p}/{q}: {q_pts:?}");
            }
        }
    }
}

#[test]
fn lens_examples() {
    let r = lens_census(3, 1).unwrap();
    let want: BTreeSet<BigInt> = [1, 2].into_iter().map(BigInt::from).collect();
    assert_eq!(r.euler_classes, want);
    let r = lens_census(7, 3).unwrap();
    assert_eq!(r.continuants, [1, 3, 5, 7].map(BigInt::from));
}

fn conjugator() -> impl Strategy<Value = Sl2Mat> {
    prop::collection::vec(0u8..3, 0..=8).prop_map(|word| {
        let gens = [Sl2Mat::new(1, 1, 0, 1).unwrap(), Sl2Mat::new(0, -1, 1, 0).unwrap(), Sl2Mat::new(1, 0, 1, 1).unwrap()];
        word.iter().fold(Sl2Mat::identity(), |m, &g| m.mul(&gens[g as usize]))
    })
}

fn monodromy() -> impl Strategy<Value = Sl2Mat> {
    prop_oneof![
        (prop::collection::vec(2i64..6, 1..4), 1u64..3, any::<bool>()).prop_map(|(mut w, k, neg)| {
            if w.iter().all(|&a| a == 2) {
                w[0] = 4;
            }
            let m = w.iter().fold(Sl2Mat::identity(), |m, &a| m.mul(&Sl2Mat::step(&BigInt::from(a)))).pow(k);
            if neg { m.neg() } else { m }
        }),
        (-7i64..=7, any::<bool>()).prop_map(|(k, neg)| {
            let m = Sl2Mat::new(1, 0, k, 1).unwrap();
            if neg { m.neg() } else { m }
        }),
        prop::sample::select(vec![(0, -1, 1, 0), (0, 1, -1, 0), (-1, -1, 1, 0), (0, 1, -1, -1), (1, -1, 1, 0), (0, -1, 1, 1)])
            .prop_map(|(a, b, c, d)| Sl2Mat::new(a, b, c, d).unwrap()),
    ]
}

fn suspension() -> impl Strategy<Value = SuspensionSpec> {
    ((-10i64..=10, -10i64..=10), 0u32..3).prop_filter("nonzero", |(v, _)| *v != (0, 0)).prop_map(|((x, y), n)| {
        let g = gcd(x, y);
        let d = Direction::lattice(x / g, y / g).unwrap();
        if n == 0 {
            SuspensionSpec::type0(d)
        } else {
            SuspensionSpec::type1(d.as_lattice().unwrap(), n).unwrap()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bundle_report_is_conjugation_invariant(a in monodromy(), q in conjugator()) {
        let b = q.mul(&a).mul(&q.inverse());
        let ra = bundle_census(&a).unwrap();
        let rb = bundle_census(&b).unwrap();
        prop_assert_eq!(ra.case, rb.case);
        prop_assert_eq!(&ra.n, &rb.n);
        prop_assert_eq!(ra.universally_tight, rb.universally_tight);
        prop_assert_eq!(ra.classification.kind, rb.classification.kind);
        if let NValue::Interval { lo, hi } = &ra.n {
            prop_assert!(lo <= hi);
        }
    }

    #[test]
    fn solid_torus_classes_are_odd(s in suspension()) {
        prop_assume!(s.direction.as_lattice().unwrap().x() != 0);
        let r = solid_torus_census(&s, 60).unwrap();
        prop_assert!(r.sets.xu.contains(&1));
        for v in r.sets.xu.iter().chain(&r.sets.xv) {
            prop_assert!(v.rem_euclid(2) == 1);
        }
        for p in &r.bhat.points {
            prop_assert!(r.sail.points.contains(p));
        }
    }

    #[test]
    fn thick_torus_reports(s0 in suspension(), s1 in suspension()) {
        let r = match thick_torus_census(&s0, &s1, 3, 40) {
            Ok(r) => r,
            Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
        };
        prop_assert!(r.sets.xu.contains(&IVec2::ZERO));
        prop_assert!(r.sets.xu.len() <= 4);
        let same_line = s0.direction.same_ray(&s1.direction) || s0.direction.opposite_ray(&s1.direction);
        let both_closed = s0.dividing_pairs > 0 && s1.dividing_pairs > 0;
        prop_assert_eq!(r.exceptional, both_closed && same_line);
        prop_assert_eq!(r.extra_orbit_count.is_some(), r.exceptional);
        let w = r.cone.left().direction().as_lattice().unwrap().vec();
        prop_assert_eq!(w, s0.direction.as_lattice().unwrap().vec());
    }
}

#[test]
fn thick_torus_examples() {
    let lat = |x, y| Direction::lattice(x, y).unwrap();
    let r = thick_torus_census(&SuspensionSpec::type0(lat(0, 1)), &SuspensionSpec::type0(lat(1, 0)), 2, 8).unwrap();
    assert_eq!(r.sets.xu, [IVec2::ZERO].into_iter().collect());
    assert_eq!(r.ut_components_per_fiber, BigInt::from(1));
    let s = SuspensionSpec::type1(pv(1, 0), 1).unwrap();
    let r = thick_torus_census(&s, &s, 2, 8).unwrap();
    assert!(r.exceptional);
    assert_eq!(r.extra_orbit_count, Some(BigInt::from(2)));
    assert_eq!(r.exceptional_fibers, Some([IVec2::ZERO, IVec2::new(2, 0)]));
    let r = thick_torus_census(&SuspensionSpec::type1(pv(0, 1), 1).unwrap(), &SuspensionSpec::type0(lat(1, 0)), 2, 8).unwrap();
    assert_eq!(r.sets.xu, [IVec2::ZERO, IVec2::new(0, 2)].into_iter().collect());
}
