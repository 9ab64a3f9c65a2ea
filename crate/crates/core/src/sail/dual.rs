use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;

use super::cone::{max_step, min_step, LatticeCone, RayBound};
use super::hull::sail_points;
use super::vec2::{wedge_partner, IVec2, PrimVec};
use crate::arith::{neg_cf_eval, NegCF, Rational, Surd};
use crate::{Error, Result};

/// The dual cone `{w' : w' ^ w > 0 for all w in C}`, bounded on the left by
/// `D1` and on the right by `-D0`, with open and closed sides exchanged.
pub fn dual_cone(c: &LatticeCone) -> Result<LatticeCone> {
    if c.is_degenerate() {
        return Err(Error::InvalidCone("the dual of a half-plane is a single ray".to_string()));
    }
    let d1 = c.right().direction().clone();
    let d0n = c.left().direction().neg();
    let left_closed = d1.is_rational() && !c.right().closed();
    let right_closed = d0n.is_rational() && !c.left().closed();
    LatticeCone::new(RayBound::new(d1, left_closed)?, RayBound::new(d0n, right_closed)?)
}

/// Integer solutions `w` in `c` of `w' ^ w = 1`, ordered by `≼`.
pub fn facet_solutions(c: &LatticeCone, w_prime: PrimVec, window: u64) -> Result<Vec<PrimVec>> {
    let wp = w_prime.vec();
    let w0 = wedge_partner(wp, 1)?;
    let mut lo: Option<i128> = None;
    let mut hi: Option<i128> = None;
    let mut infeasible = false;
    // Each side constraint reads alpha + t beta >= 0, strict on open sides.
    let left = c.left();
    let right = c.right();
    let constraints = [
        (left.direction().wedge_from(w0), left.direction().wedge_from(wp), left.closed()),
        (right.direction().wedge_from(w0).neg(), right.direction().wedge_from(wp).neg(), right.closed()),
    ];
    let n_constraints = if c.is_degenerate() { 1 } else { 2 };
    for (alpha, beta, closed) in constraints.iter().take(n_constraints) {
        match beta.signum() {
            Ordering::Greater => {
                let t = min_step(alpha, beta, *closed)?;
                lo = Some(lo.map_or(t, |l| l.max(t)));
            }
            Ordering::Less => {
                let t = max_step(&alpha.neg(), &beta.neg(), *closed)?;
                hi = Some(hi.map_or(t, |h| h.min(t)));
            }
            Ordering::Equal => {
                let s = alpha.signum();
                if s == Ordering::Less || (s == Ordering::Equal && !*closed) {
                    infeasible = true;
                }
            }
        }
    }
    if infeasible {
        return Ok(Vec::new());
    }
    let bounded = lo.is_some() && hi.is_some();
    let (lo, hi) = if bounded {
        (lo.unwrap(), hi.unwrap())
    } else {
        let (blo, bhi) = box_t_range(w0, wp, window as i128);
        let lo = lo.map_or(blo, |l| l.max(blo));
        let hi = hi.map_or(bhi, |h| h.min(bhi));
        if lo > hi {
            return Err(Error::WindowTooSmall);
        }
        (lo, hi)
    };
    if lo > hi {
        return Ok(Vec::new());
    }
    if hi - lo > 1_000_000 {
        return Err(Error::Unsupported("facet solution set too large".to_string()));
    }
    let mut out = Vec::new();
    for t in lo..=hi {
        let w = w0.checked_axpy(t, wp)?;
        if c.contains(w) {
            out.push(PrimVec::try_from_vec(w)?);
        }
    }
    Ok(out)
}

/// Range of `t` with `p + t e` in the box `|x|, |y| <= w`, `e != 0`.
fn box_t_range(p: IVec2, e: IVec2, w: i128) -> (i128, i128) {
    let mut lo = i128::MIN / 4;
    let mut hi = i128::MAX / 4;
    for (pc, ec) in [(p.x as i128, e.x as i128), (p.y as i128, e.y as i128)] {
        if ec == 0 {
            if pc.abs() > w {
                return (1, 0);
            }
            continue;
        }
        let a = Rational::new(BigInt::from(-w - pc), BigInt::from(ec));
        let b = Rational::new(BigInt::from(w - pc), BigInt::from(ec));
        let (a, b) = if ec > 0 { (a, b) } else { (b, a) };
        let ca = crate::arith::rat_ceil(&a);
        let fb = crate::arith::rat_floor(&b);
        lo = lo.max(i128::try_from(&ca).unwrap_or(i128::MAX / 4));
        hi = hi.min(i128::try_from(&fb).unwrap_or(i128::MIN / 4));
    }
    (lo, hi)
}

/// A point of the dual sail that is not an endpoint, with its facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPoint {
    pub point: PrimVec,
    /// Position of the point in [`DualSail::points`].
    pub index: usize,
    /// Solutions in `C` of `point ^ w = 1`, ordered by `≼`.
    pub facets: Vec<PrimVec>,
}

impl DualPoint {
    /// The weight `|S(w')| + 1`.
    pub fn weight(&self) -> i64 {
        self.facets.len() as i64 + 1
    }
}

/// The sail of the dual cone, listed so that consecutive points have
/// positive wedge, with facets attached to its non-endpoint points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSail {
    pub cone: LatticeCone,
    pub points: Vec<PrimVec>,
    pub interior: Vec<DualPoint>,
    /// Every point of the dual sail is listed.
    pub complete: bool,
}

impl DualSail {
    /// Weights of the interior points in order.
    pub fn weights(&self) -> Vec<i64> {
        self.interior.iter().map(DualPoint::weight).collect()
    }
}

/// Dual sail of `c` within a window, with facet data.
pub fn dual_sail(c: &LatticeCone, window: u64) -> Result<DualSail> {
    let dual = dual_cone(c)?;
    let s = sail_points(&dual, window)?;
    let mut points = s.points.clone();
    points.reverse();
    let mut interior = Vec::new();
    for (index, &p) in points.iter().enumerate() {
        if s.is_boundary_point(p) {
            continue;
        }
        let facets = facet_solutions(c, p, window)?;
        interior.push(DualPoint { point: p, index, facets });
    }
    Ok(DualSail { cone: dual, points, interior, complete: s.complete })
}

/// Value of the truncated continued fraction `a_i - 1/(a_{i+1} - ...)` of
/// length `depth` built from the facet weights of the dual sail.
pub fn slope_from_facets(c: &LatticeCone, i: usize, depth: usize, window: u64) -> Result<Rational> {
    if depth == 0 {
        return Err(Error::OutOfRange("depth must be positive".to_string()));
    }
    let ds = dual_sail(c, window)?;
    let w = ds.weights();
    if i + depth > w.len() {
        return Err(Error::InsufficientDepth(alloc::format!(
            "requested {} weights from index {}, {} available",
            depth,
            i,
            w.len()
        )));
    }
    let cf = NegCF::from_i64s(&w[i..i + depth])?;
    neg_cf_eval(&cf)
}

/// Exact slope `x / y` of `d1` in the basis `(e1, e2)`, as a quadratic
/// number; `None` when `d1` is parallel to `e1`.
pub fn slope_in_basis(c: &LatticeCone, e1: IVec2, e2: IVec2) -> Option<Surd> {
    // d1 = X e1 + Y e2 gives X = (d1 ^ e2) / (e1 ^ e2), Y = (e1 ^ d1) / (e1 ^ e2).
    let d = c.right().direction();
    let x = d.wedge_from(e2).neg();
    let y = d.wedge_from(e1);
    x.div(&y)
}
