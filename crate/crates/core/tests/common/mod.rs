#![allow(dead_code)]

use proptest::prelude::*;
use tightcensus_core::sail::{IVec2, LatticeCone, PrimVec};
use tightcensus_oracles::{gcd, wedge, RatCone};

pub fn pv(x: i64, y: i64) -> PrimVec {
    PrimVec::new(x, y).unwrap()
}

pub fn pair(v: PrimVec) -> (i64, i64) {
    (v.x(), v.y())
}

pub fn ivec(v: (i64, i64)) -> IVec2 {
    IVec2::new(v.0, v.1)
}

pub fn to_kernel(c: &RatCone) -> LatticeCone {
    LatticeCone::rational(c.left, c.left_closed, c.right, c.right_closed).unwrap()
}

fn primitive(v: (i64, i64)) -> (i64, i64) {
    let g = gcd(v.0, v.1);
    (v.0 / g, v.1 / g)
}

/// Strictly convex rational cones with direction coordinates in `[-r, r]`
/// and random open/closed flags.
pub fn rat_cone(r: i64) -> impl Strategy<Value = RatCone> {
    ((-r..=r, -r..=r), (-r..=r, -r..=r), any::<bool>(), any::<bool>())
        .prop_filter("nonzero directions", |(a, b, _, _)| *a != (0, 0) && *b != (0, 0))
        .prop_map(|(a, b, lc, rc)| (primitive(a), primitive(b), lc, rc))
        .prop_filter("not collinear", |(a, b, _, _)| wedge(*a, *b) != 0)
        .prop_map(|(a, b, lc, rc)| {
            let (left, right) = if wedge(a, b) < 0 { (a, b) } else { (b, a) };
            RatCone { left, left_closed: lc, right, right_closed: rc }
        })
}

/// Cones open on both sides.
pub fn open_cone(r: i64) -> impl Strategy<Value = RatCone> {
    rat_cone(r).prop_map(|c| RatCone { left_closed: false, right_closed: false, ..c })
}

/// Cones closed on both sides.
pub fn closed_cone(r: i64) -> impl Strategy<Value = RatCone> {
    rat_cone(r).prop_map(|c| RatCone { left_closed: true, right_closed: true, ..c })
}

/// Every vector `b` with `0 <= b[j] < ranges[j]`.
pub fn box_points(ranges: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &r in ranges {
        out = out.into_iter().flat_map(|b| (0..r).map(move |x| [b.clone(), vec![x]].concat())).collect();
    }
    out
}
