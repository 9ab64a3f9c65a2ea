//! JSON reports. Keys keep a fixed order and sets are emitted as sorted
//! arrays, so identical inputs give byte-identical output.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use tightcensus_core::arcs::{annulus_count, disk_count, enumerate_matchings, ArcProblem, Matching};
use tightcensus_core::arith::{continuants, neg_cf_eval, NegCF, PeriodicNegCF, QuadraticIrrational, Sl2Kind, Sl2Mat};
use tightcensus_core::census::{
    BundleReport, DeltaImage, LensReport, NCase, NValue, SolidReport, ThickReport, TwoPathCheck,
};
use tightcensus_core::gamma::{Candidates, EulerSets, GammaValues};
use tightcensus_core::sail::{
    Direction, DualSail, EdgeKind, EdgePointSet, EndKind, IVec2, LatticeCone, PrimVec, RayBound, Sail,
};

/// Version tag carried by every report.
pub const SCHEMA: &str = "census/1";

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
pub fn int(b: &BigInt) -> Value {
    match b.to_i64() {
        Some(v) => json!(v),
        None => json!(b.to_string()),
    }
}

pub fn ints<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(it.into_iter().map(int).collect())
}

pub fn vec2(v: IVec2) -> Value {
    json!([v.x, v.y])
}

pub fn prim(v: PrimVec) -> Value {
    json!([v.x(), v.y()])
}

pub fn prims<'a>(it: impl IntoIterator<Item = &'a PrimVec>) -> Value {
    Value::Array(it.into_iter().copied().map(prim).collect())
}

pub fn vec2s<'a>(it: impl IntoIterator<Item = &'a IVec2>) -> Value {
    Value::Array(it.into_iter().copied().map(vec2).collect())
}

pub fn quadratic(z: &QuadraticIrrational) -> Value {
    json!({ "p": int(z.p()), "d": int(z.d()), "q": int(z.q()), "text": z.to_string() })
}

pub fn matrix(m: &Sl2Mat) -> Value {
    json!([[int(&m.a), int(&m.b)], [int(&m.c), int(&m.d)]])
}

pub fn direction(d: &Direction) -> Value {
    match d {
        Direction::Lattice(p) => json!({ "lattice": prim(*p) }),
        Direction::Quadratic { slope, positive } => json!({ "slope": quadratic(slope), "positive": positive }),
    }
}

fn ray(r: &RayBound) -> Value {
    json!({ "direction": direction(r.direction()), "closed": r.closed() })
}

pub fn cone(c: &LatticeCone) -> Value {
    json!({ "left": ray(c.left()), "right": ray(c.right()), "degenerate": c.is_degenerate(), "text": c.to_string() })
}

fn end_kind(e: EndKind) -> &'static str {
    match e {
        EndKind::Closed => "closed",
        EndKind::OpenRay => "open_ray",
        EndKind::Irrational => "irrational",
    }
}

fn edge_kind(e: EdgeKind) -> &'static str {
    match e {
        EdgeKind::Finite => "finite",
        EdgeKind::LeftRay => "left_ray",
        EdgeKind::RightRay => "right_ray",
        EdgeKind::LeftBoundary => "left_boundary",
        EdgeKind::RightBoundary => "right_boundary",
        EdgeKind::Line => "line",
    }
}

pub fn sail(s: &Sail) -> Value {
    let edges: Vec<Value> = s
        .edges
        .iter()
        .map(|e| {
            json!({
                "start": e.start,
                "end": e.end,
                "finite": e.finite,
                "kind": edge_kind(e.kind),
                "direction": vec2(e.direction),
                "fully_listed": e.fully_listed,
            })
        })
        .collect();
    json!({
        "points": prims(&s.points),
        "edges": edges,
        "window": s.window,
        "left_end": end_kind(s.left_end),
        "right_end": end_kind(s.right_end),
        "complete": s.complete,
        "finite_part_complete": s.finite_part_complete,
        "empty": s.empty,
        "boundary": prims(&s.boundary),
    })
}

pub fn edge_point_set(e: &EdgePointSet) -> Value {
    json!({
        "points": prims(&e.points),
        "left_extremity": e.left_extremity.map(prim),
        "right_extremity": e.right_extremity.map(prim),
        "complete": e.complete,
    })
}

pub fn dual_sail(d: &DualSail) -> Value {
    let interior: Vec<Value> = d
        .interior
        .iter()
        .map(|p| json!({ "point": prim(p.point), "index": p.index, "weight": p.weight(), "facets": prims(&p.facets) }))
        .collect();
    json!({
        "cone": cone(&d.cone),
        "points": prims(&d.points),
        "interior": interior,
        "weights": d.weights(),
        "complete": d.complete,
    })
}

pub fn gamma_values(g: &GammaValues) -> Value {
    json!({ "count": g.count, "values": vec2s(&g.values) })
}

pub fn euler_sets(s: &EulerSets) -> Value {
    json!({ "xu": vec2s(&s.xu), "xv": vec2s(&s.xv), "xv_complete": s.xv_complete })
}

pub fn candidates(c: &Candidates) -> Value {
    json!({
        "subsets": c.subsets.iter().map(|q| prims(q.points())).collect::<Vec<_>>(),
        "truncated": c.truncated,
    })
}

/// Wraps a report body with the schema tag, its kind, a description of the
/// rule applied and the exactness flag.
pub fn envelope(report: &str, provenance: &str, exact: bool, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("report".into(), json!(report));
    m.insert("provenance".into(), json!(provenance));
    m.insert("exact".into(), json!(exact));
    match body {
        Value::Object(b) => m.extend(b),
        other => {
            m.insert("value".into(), other);
        }
    }
    Value::Object(m)
}

pub fn two_path(t: &TwoPathCheck) -> Value {
    json!({ "formula": int(&t.formula), "geometric": int(&t.geometric), "complete": t.complete, "agree": t.agree() })
}

pub fn lens(r: &LensReport, t: &TwoPathCheck) -> Value {
    let structures = r.structures.as_ref().map(|list| {
        list.iter()
            .map(|s| json!({ "b": s.b, "maslov": s.maslov, "euler": int(&s.euler), "homotopy": int(&s.homotopy) }))
            .collect::<Vec<_>>()
    });
    let body = json!({
        "p": r.p,
        "q": r.q,
        "cf": ints(r.cf.coeffs()),
        "oriented_count": int(&r.oriented_count),
        "unoriented_count": int(&r.unoriented_count),
        "universally_tight_oriented": r.universally_tight_oriented,
        "surgery_weights": ints(&r.chain.weights),
        "homology_order": int(&r.homology_order),
        "invariant_factors": ints(&r.homology.invariant_factors),
        "continuants": ints(&r.continuants),
        "mu_images": ints(&r.mu_images),
        "euler_classes": ints(&r.euler_classes),
        "euler_class_count": r.euler_classes.len(),
        "homotopy_invariants": ints(&r.homotopy_invariants),
        "structures": structures,
        "two_path": two_path(t),
        "notes": [
            "Euler classes use rotation numbers 2 - a_i + 2 b_i on the chain components, in units of the image of mu_0"
        ],
    });
    envelope(
        "lens",
        "lens-space count: product of (a_i - 1) over the negative continued fraction of p/q",
        t.complete,
        body,
    )
}

fn case_name(c: NCase) -> &'static str {
    match c {
        NCase::HyperbolicNegativeTrace => "hyperbolic_negative_trace",
        NCase::HyperbolicPositiveTrace => "hyperbolic_positive_trace",
        NCase::ParabolicNegative => "parabolic_negative_k",
        NCase::ParabolicPositiveOdd => "parabolic_positive_odd_k",
        NCase::ParabolicPositiveEven => "parabolic_positive_even_k",
        NCase::ParabolicNegativeTrace => "parabolic_trace_minus_two",
        NCase::PlusMinusIdentity => "plus_minus_identity",
        NCase::FiniteOrderGeneric => "finite_order",
        NCase::FiniteOrderExceptional => "finite_order_rotation_class",
    }
}

fn case_provenance(c: NCase) -> &'static str {
    match c {
        NCase::HyperbolicNegativeTrace => "torus-bundle count: product of (a_i - 1) over the period, to the number of periods",
        NCase::HyperbolicPositiveTrace => "torus-bundle count: product of (a_i - 1) over the period, to the number of periods, minus 2",
        NCase::ParabolicNegative => "torus-bundle count: |k| - 1 for a unipotent monodromy with k < 0",
        NCase::ParabolicPositiveOdd => "torus-bundle count: none for a unipotent monodromy with odd k > 0",
        NCase::ParabolicPositiveEven => "torus-bundle count: at most 2 for a unipotent monodromy with even k > 0",
        NCase::ParabolicNegativeTrace => "torus-bundle count: at most 2, trace -2 left open",
        NCase::PlusMinusIdentity => "torus-bundle count: none for the identity and its negative",
        NCase::FiniteOrderGeneric => "torus-bundle count: none for finite-order monodromy outside the rotation classes",
        NCase::FiniteOrderExceptional => "torus-bundle count: at most 2 for the rotation classes of order 4 and 6",
    }
}

fn n_value(n: &NValue) -> Value {
    match n {
        NValue::Exact(v) => int(v),
        NValue::Interval { lo, hi } => json!({ "lo": int(lo), "hi": int(hi) }),
    }
}

fn delta(d: &DeltaImage) -> Value {
    match d {
        DeltaImage::Full => json!({ "kind": "full" }),
        DeltaImage::MinusFixedPoint { fixed } => json!({ "kind": "minus_fixed_point", "fixed": [int(&fixed.0), int(&fixed.1)] }),
        DeltaImage::Interval { stable, unstable } => {
            json!({ "kind": "interval", "stable": quadratic(stable), "unstable": quadratic(unstable) })
        }
        DeltaImage::Unspecified => json!({ "kind": "unspecified" }),
    }
}

fn periodic(e: &PeriodicNegCF) -> Value {
    json!({ "preperiod": ints(&e.preperiod), "period": ints(&e.period), "reduced": quadratic(&e.reduced) })
}

pub fn bundle(r: &BundleReport, torsion_max: u32) -> Value {
    let c = &r.classification;
    let kind = match c.kind {
        Sl2Kind::FiniteOrder => "finite_order",
        Sl2Kind::Parabolic => "parabolic",
        Sl2Kind::Hyperbolic => "hyperbolic",
    };
    let normal_form = match c.kind {
        Sl2Kind::Hyperbolic => {
            let h = c.hyperbolic.as_ref().expect("hyperbolic data");
            json!({
                "primitive": matrix(&h.primitive),
                "power": h.power,
                "expansion": periodic(&h.expansion),
                "period_repetitions": h.period_repetitions,
                "primitive_word": ints(&h.primitive_word()),
                "unstable_slope": quadratic(&h.unstable_slope),
                "stable_slope": quadratic(&h.stable_slope),
            })
        }
        Sl2Kind::Parabolic => {
            let p = c.parabolic.as_ref().expect("parabolic data");
            json!({ "eps": p.eps, "k": int(&p.k), "fixed": [int(&p.fixed.0), int(&p.fixed.1)] })
        }
        Sl2Kind::FiniteOrder => {
            let f = c.finite.as_ref().expect("finite-order data");
            json!({
                "order": f.order,
                "j_form": f.j_form.map(|(e, k)| json!({ "eps": e, "k": k })),
                "rotation_form": f.rotation_form,
            })
        }
    };
    let body = json!({
        "matrix": matrix(&c.matrix),
        "kind": kind,
        "trace": int(&c.trace),
        "normal_form": normal_form,
        "case": case_name(r.case),
        "N": n_value(&r.n),
        "universally_tight": {
            "infinite_family": r.universally_tight.infinite_family,
            "unique_per_torsion": r.universally_tight.unique_per_torsion,
            "torsion_values": (0..=torsion_max).collect::<Vec<_>>(),
        },
        "delta": delta(&r.delta),
    });
    envelope("bundle", case_provenance(r.case), r.n.is_exact(), body)
}

pub fn thick(r: &ThickReport, retournement: Option<(IVec2, &Candidates)>) -> Value {
    let mut body = json!({
        "cone": cone(&r.cone),
        "sail": sail(&r.sail),
        "sets": euler_sets(&r.sets),
        "torsion_values": (0..=r.torsion_max).collect::<Vec<_>>(),
        "exceptional": r.exceptional,
        "exceptional_fibers": r.exceptional_fibers.map(|f| vec2s(&f)),
        "exceptional_fibers_reversed": r.exceptional_fibers_reversed.map(|f| vec2s(&f)),
        "ut_components_per_fiber": int(&r.ut_components_per_fiber),
        "extra_orbit_count": r.extra_orbit_count.as_ref().map(int),
    });
    let mut exact = r.sail.complete && r.sets.xv_complete;
    if let Some((chi, c)) = retournement {
        body["retournement"] = json!({ "chi": vec2(chi), "candidates": candidates(c) });
        exact &= !c.truncated;
    }
    envelope("thick", "thick-torus classes: X_u over endpoint subsets, X_v over subsets meeting the interior", exact, body)
}

pub fn solid(r: &SolidReport) -> Value {
    let body = json!({
        "cone": cone(&r.cone),
        "sail": sail(&r.sail),
        "bhat": edge_point_set(&r.bhat),
        "xu": r.sets.xu.iter().collect::<Vec<_>>(),
        "xv": r.sets.xv.iter().collect::<Vec<_>>(),
    });
    envelope(
        "solid",
        "solid-torus classes: 1 + 2 x(gamma(Q)) over even subsets of the non-meridian edge points",
        r.sets.complete,
        body,
    )
}

pub fn cf_rational(p: &BigInt, q: &BigInt, cf: &NegCF) -> Value {
    let value = neg_cf_eval(cf).expect("a valid expansion evaluates");
    let body = json!({
        "p": int(p),
        "q": int(q),
        "cf": ints(cf.coeffs()),
        "continuants": ints(&continuants(cf)),
        "value": value.to_string(),
        "product_minus_one": int(&cf.product_minus_one()),
    });
    envelope("cf", "negative continued fraction by iterated ceilings", true, body)
}

pub fn cf_quadratic(z: &QuadraticIrrational, e: &PeriodicNegCF) -> Value {
    let body = json!({ "surd": quadratic(z), "expansion": periodic(e) });
    envelope("cf", "periodic negative continued fraction of a quadratic irrational", true, body)
}

pub fn sail_report(
    c: &LatticeCone,
    s: &Sail,
    finite: &EdgePointSet,
    dual: Option<&DualSail>,
    values: Option<&GammaValues>,
    interior: Option<(PrimVec, bool)>,
) -> Value {
    let mut body = json!({
        "cone": cone(c),
        "sail": sail(s),
        "finite_edge_points": edge_point_set(finite),
        "dual": dual.map(dual_sail),
        "even_gamma": values.map(gamma_values),
    });
    if let Some((w, inside)) = interior {
        body["interior_test"] = json!({ "point": prim(w), "interior": inside });
    }
    envelope("sail", "boundary chain of the hull of the integer points of the cone", s.complete, body)
}

fn matching(m: &Matching) -> Value {
    let pairs: Vec<Value> = m.pairs.iter().map(|&((c0, i0), (c1, i1))| json!([[c0, i0], [c1, i1]])).collect();
    json!({ "pairs": pairs, "crossing": m.crossing, "puncture_gap": m.puncture_gap })
}

/// Closed form count, cross-checked by enumeration when within the guard.
pub fn arcs(problem: ArcProblem, list: bool) -> tightcensus_core::Result<Value> {
    let (surface, shape, count) = match problem {
        ArcProblem::PuncturedDisk(n) => ("punctured_disk", json!({ "n": n }), disk_count(n)),
        ArcProblem::Annulus(n0, n1) => ("annulus", json!({ "n0": n0, "n1": n1 }), annulus_count(n0, n1)),
    };
    let enumerated = match enumerate_matchings(problem) {
        Ok(v) => Some(v),
        Err(e) if list => return Err(e),
        Err(_) => None,
    };
    let mut body = json!({
        "surface": surface,
        "marks": shape,
        "count": int(&count),
        "enumerated": enumerated.as_ref().map(|v| v.len()),
    });
    if list {
        body["matchings"] = Value::Array(enumerated.iter().flatten().map(matching).collect());
    }
    let provenance = match problem {
        ArcProblem::PuncturedDisk(_) => "disjoint arc families on the punctured disk: C(2n, n)",
        ArcProblem::Annulus(..) => "disjoint arc families on the annulus up to boundary-fixing diffeomorphism",
    };
    Ok(envelope("arcs", provenance, true, body))
}
