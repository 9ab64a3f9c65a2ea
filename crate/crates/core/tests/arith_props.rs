use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;
use tightcensus_core::arith::{
    chain_relations, classify_sl2, continuants, neg_cf_eval, neg_cf_expand, periodic_surd, primitive_root,
    quadratic_neg_cf, smith_presentation, QuadraticIrrational, Sl2Kind, Sl2Mat,
};
use tightcensus_oracles::{additive_order, brute_roots, det, eval_neg_cf, gcd, greedy_neg_cf};

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn small(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().unwrap()).collect()
}

#[test]
fn expansion_round_trip_up_to_200() {
    for p in 2i64..=200 {
        for q in 1..p {
            if gcd(p, q) != 1 {
                continue;
            }
            let cf = neg_cf_expand(p, q).unwrap();
            let a = small(cf.coeffs());
            assert!(a.iter().all(|&x| x >= 2), "{p}/{q}: {a:?}");
            assert_eq!(a, greedy_neg_cf(p, q), "{p}/{q}");
            assert_eq!(neg_cf_eval(&cf).unwrap(), eval_neg_cf(&a), "{p}/{q}");
            let c = continuants(&cf);
            assert_eq!(c.len(), a.len() + 1);
            assert_eq!(c[0], BigInt::one());
            assert_eq!(*c.last().unwrap(), BigInt::from(p));
            for i in 1..a.len() {
                assert!(c[i + 1] > BigInt::from(a[i] - 1) * &c[i], "{p}/{q} at {i}");
            }
        }
    }
}

#[test]
fn continuant_examples() {
    let c = |a: &[i64]| small(&continuants(&cf_of(a)));
    assert_eq!(c(&[3, 2, 2]), vec![1, 3, 5, 7]);
    assert_eq!(c(&[2, 2, 2, 2]), vec![1, 2, 3, 4, 5]);
}

fn cf_of(a: &[i64]) -> tightcensus_core::arith::NegCF {
    tightcensus_core::arith::NegCF::from_i64s(a).unwrap()
}

fn is_rotation(a: &[BigInt], b: &[BigInt]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|r| (0..a.len()).all(|k| a[(k + r) % a.len()] == b[k]))
}

fn surd() -> impl Strategy<Value = QuadraticIrrational> {
    (2i64..300, -60i64..60, prop_oneof![-12i64..=-1, 1i64..=12])
        .prop_filter("non-square", |(d, _, _)| {
            let r = (*d as f64).sqrt().round() as i64;
            r * r != *d
        })
        .prop_map(|(d, p, q)| QuadraticIrrational::new(p, d, q).unwrap())
}

/// Products of at most eight elementary generators of `SL2(Z)`.
fn conjugator() -> impl Strategy<Value = Sl2Mat> {
    prop::collection::vec(0u8..4, 0..=8).prop_map(|word| {
        let gens = [
            Sl2Mat::new(1, 1, 0, 1).unwrap(),
            Sl2Mat::new(1, -1, 0, 1).unwrap(),
            Sl2Mat::new(0, -1, 1, 0).unwrap(),
            Sl2Mat::new(1, 0, 1, 1).unwrap(),
        ];
        word.iter().fold(Sl2Mat::identity(), |m, &g| m.mul(&gens[g as usize]))
    })
}

fn sample_matrix() -> impl Strategy<Value = Sl2Mat> {
    prop_oneof![
        (prop::collection::vec(2i64..6, 1..4), any::<bool>()).prop_map(|(w, neg)| {
            let mut w = w;
            if w.iter().all(|&a| a == 2) {
                w[0] = 3;
            }
            let m = w.iter().fold(Sl2Mat::identity(), |m, &a| m.mul(&Sl2Mat::step(&BigInt::from(a))));
            if neg { m.neg() } else { m }
        }),
        (-6i64..=6, any::<bool>()).prop_map(|(k, neg)| {
            let m = Sl2Mat::new(1, 0, k, 1).unwrap();
            if neg { m.neg() } else { m }
        }),
        prop::sample::select(vec![(0, -1, 1, 0), (0, 1, -1, 0), (-1, -1, 1, 0), (0, 1, -1, -1), (1, -1, 1, 0), (0, -1, 1, 1)])
            .prop_map(|(a, b, c, d)| Sl2Mat::new(a, b, c, d).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn surd_expansions_are_periodic(z in surd()) {
        let e = quadratic_neg_cf(&z);
        prop_assert!(!e.period.is_empty());
        let back = periodic_surd(&e.period).unwrap();
        prop_assert_eq!(back.to_surd().cmp_to(&e.reduced.to_surd()), std::cmp::Ordering::Equal);
        let again = quadratic_neg_cf(&back);
        prop_assert!(again.preperiod.is_empty());
        prop_assert_eq!(&again.period, &e.period);
        let shifted = QuadraticIrrational::new(z.p() + z.q(), z.d().clone(), z.q().clone()).unwrap();
        prop_assert!(is_rotation(&quadratic_neg_cf(&shifted).period, &e.period));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn classification_is_conjugation_invariant(a in sample_matrix(), q in conjugator()) {
        let b = q.mul(&a).mul(&q.inverse());
        let ca = classify_sl2(&a).unwrap();
        let cb = classify_sl2(&b).unwrap();
        prop_assert_eq!(ca.kind, cb.kind);
        match ca.kind {
            Sl2Kind::Hyperbolic => {
                let (ha, hb) = (ca.hyperbolic.unwrap(), cb.hyperbolic.unwrap());
                prop_assert!(is_rotation(ha.period(), hb.period()));
                prop_assert_eq!(ha.period_repetitions, hb.period_repetitions);
                prop_assert_eq!(ha.power, hb.power);
            }
            Sl2Kind::Parabolic => {
                let (pa, pb) = (ca.parabolic.unwrap(), cb.parabolic.unwrap());
                prop_assert_eq!((pa.eps, pa.k), (pb.eps, pb.k));
            }
            Sl2Kind::FiniteOrder => {
                let (fa, fb) = (ca.finite.unwrap(), cb.finite.unwrap());
                prop_assert_eq!(fa, fb);
            }
        }
    }

    #[test]
    fn primitive_root_is_exact_and_primitive(w in prop::collection::vec(2i64..5, 1..3), k in 1u64..4, neg in any::<bool>()) {
        prop_assume!(w.iter().any(|&a| a > 2));
        let p = w.iter().fold(Sl2Mat::identity(), |m, &a| m.mul(&Sl2Mat::step(&BigInt::from(a))));
        let p = if neg { p.neg() } else { p };
        let a = p.pow(k);
        let (r, m) = primitive_root(&a).unwrap();
        let mut prod = Sl2Mat::identity();
        for _ in 0..m {
            prod = prod.mul(&r);
        }
        prop_assert_eq!(&prod, &a);
        prop_assert!(m >= k);
        let e = [[r.a.to_i64().unwrap(), r.b.to_i64().unwrap()], [r.c.to_i64().unwrap(), r.d.to_i64().unwrap()]];
        let bound = e.iter().flatten().map(|x| x.abs()).max().unwrap();
        if bound <= 12 {
            for n in 2..=3 {
                prop_assert!(brute_roots(&e, n, bound).is_empty(), "{} has a root of order {}", r, n);
            }
        }
    }
}

#[test]
fn primitive_root_examples() {
    let g = Sl2Mat::new(2, 1, 1, 1).unwrap();
    assert_eq!(primitive_root(&Sl2Mat::new(5, 3, 3, 2).unwrap()).unwrap(), (g.clone(), 2));
    assert_eq!(primitive_root(&Sl2Mat::new(13, 8, 8, 5).unwrap()).unwrap(), (g, 3));
}

#[test]
fn lens_relation_matrices_present_cyclic_groups() {
    for p in 2i64..=60 {
        for q in 1..p {
            if gcd(p, q) != 1 {
                continue;
            }
            let cf = neg_cf_expand(p, q).unwrap();
            let rel = chain_relations(cf.coeffs());
            let rows: Vec<Vec<i64>> = rel.iter().map(|r| small(r)).collect();
            assert_eq!(det(&rows), BigInt::from(p), "{p}/{q}");
            let sp = smith_presentation(&rel);
            assert!(sp.is_cyclic());
            assert_eq!(sp.order, Some(BigInt::from(p)));
            let g0 = sp.generator_images[0][0].to_i64().unwrap();
            assert_eq!(additive_order(g0, p), p, "{p}/{q}");
            // mu_i = p_i mu_0 in the cyclic group.
            let c = continuants(&cf);
            for (i, img) in sp.generator_images.iter().enumerate() {
                let want = (c[i].to_i64().unwrap() * g0).rem_euclid(p);
                assert_eq!(img[0].to_i64().unwrap(), want, "{p}/{q} generator {i}");
            }
        }
    }
}

#[test]
fn small_relation_matrices() {
    let sp = smith_presentation(&chain_relations(&big(&[3, 2, 2])));
    assert_eq!(sp.invariant_factors, big(&[7]));
    let sp = smith_presentation(&chain_relations(&big(&[4])));
    assert_eq!(sp.invariant_factors, big(&[4]));
}
