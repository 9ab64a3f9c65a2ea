use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::cone::{is_zero_surd, max_step, min_step, LatticeCone};
use super::vec2::{wedge_partner, IVec2, PrimVec};
use crate::arith::Surd;
use crate::{Error, Result};

/// Upper bound on hull steps in one walk before giving up.
const MAX_STEPS: usize = 1 << 20;

/// How one end of the sail terminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndKind {
    /// The end lies on a closed rational ray; the ray's primitive vector ends the chain.
    Closed,
    /// An infinite edge runs along an open rational ray.
    OpenRay,
    /// The ray is irrational and the chain has infinitely many vertices.
    Irrational,
}

/// Kind of an edge of the hull boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// Segment between two vertices.
    Finite,
    /// Infinite edge ending at a vertex, coming from the left end.
    LeftRay,
    /// Infinite edge starting at a vertex, going to the right end.
    RightRay,
    /// The closed left boundary ray; its only primitive point is its generator.
    LeftBoundary,
    /// The closed right boundary ray.
    RightBoundary,
    /// A full line, for an open half-plane.
    Line,
}

/// Boundary segment of the hull in left-to-right orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Segment {
    /// Points `start + k dir`, `0 <= k <= len`.
    Finite { start: IVec2, dir: IVec2, len: i64 },
    /// Points `vertex + k out`, `k >= 0`, listed from large `k` down to 0.
    LeftRay { vertex: IVec2, out: IVec2 },
    /// Points `vertex + k out`, `k >= 0`.
    RightRay { vertex: IVec2, out: IVec2 },
    LeftBoundary { point: IVec2 },
    RightBoundary { point: IVec2 },
    /// Points `base + t dir` for every integer `t`, increasing `t`.
    Line { base: IVec2, dir: IVec2 },
}

impl Segment {
    fn kind(&self) -> EdgeKind {
        match self {
            Segment::Finite { .. } => EdgeKind::Finite,
            Segment::LeftRay { .. } => EdgeKind::LeftRay,
            Segment::RightRay { .. } => EdgeKind::RightRay,
            Segment::LeftBoundary { .. } => EdgeKind::LeftBoundary,
            Segment::RightBoundary { .. } => EdgeKind::RightBoundary,
            Segment::Line { .. } => EdgeKind::Line,
        }
    }

    /// Direction of the supporting line.
    fn direction(&self) -> IVec2 {
        match *self {
            Segment::Finite { dir, .. } | Segment::Line { dir, .. } => dir,
            Segment::LeftRay { out, .. } => -out,
            Segment::RightRay { out, .. } => out,
            Segment::LeftBoundary { point } => -point,
            Segment::RightBoundary { point } => point,
        }
    }

    /// First point in left-to-right order, if the segment is bounded on the left.
    fn first(&self) -> Option<IVec2> {
        match *self {
            Segment::Finite { start, .. } => Some(start),
            Segment::RightRay { vertex, .. } => Some(vertex),
            Segment::LeftBoundary { point } | Segment::RightBoundary { point } => Some(point),
            Segment::LeftRay { .. } | Segment::Line { .. } => None,
        }
    }

    /// Last point in left-to-right order, if the segment is bounded on the right.
    fn last(&self) -> Option<IVec2> {
        match *self {
            Segment::Finite { start, dir, len } => Some(start + len * dir),
            Segment::LeftRay { vertex, .. } => Some(vertex),
            Segment::LeftBoundary { point } | Segment::RightBoundary { point } => Some(point),
            Segment::RightRay { .. } | Segment::Line { .. } => None,
        }
    }

    fn is_bounded(&self) -> bool {
        self.first().is_some() && self.last().is_some()
    }

    /// Primitive points with coordinates bounded by `w`, in left-to-right
    /// order, and whether every primitive point of the segment was listed.
    fn window_points(&self, w: i128) -> (Vec<IVec2>, bool) {
        let mut out = Vec::new();
        let mut push = |v: IVec2| {
            if v.is_primitive() {
                out.push(v);
            }
        };
        let full = match *self {
            Segment::Finite { start, dir, len } => {
                let (lo, hi) = box_range(start, dir, w, 0, Some(len as i128));
                for k in lo..=hi {
                    push(at(start, k, dir));
                }
                lo == 0 && hi == len as i128
            }
            Segment::LeftRay { vertex, out: o } => {
                let (lo, hi) = box_range(vertex, o, w, 0, None);
                for k in (lo..=hi).rev() {
                    push(at(vertex, k, o));
                }
                false
            }
            Segment::RightRay { vertex, out: o } => {
                let (lo, hi) = box_range(vertex, o, w, 0, None);
                for k in lo..=hi {
                    push(at(vertex, k, o));
                }
                false
            }
            Segment::LeftBoundary { point } | Segment::RightBoundary { point } => {
                if (point.norm_inf() as i128) <= w {
                    push(point);
                    true
                } else {
                    false
                }
            }
            Segment::Line { base, dir } => {
                let (lo, hi) = box_range_line(base, dir, w);
                for t in lo..=hi {
                    push(at(base, t, dir));
                }
                false
            }
        };
        (out, full)
    }
}

fn at(p: IVec2, k: i128, e: IVec2) -> IVec2 {
    IVec2::new((p.x as i128 + k * e.x as i128) as i64, (p.y as i128 + k * e.y as i128) as i64)
}

/// Integer `k` range in `[lo0, hi0]` with `p + k e` inside the box `|x|, |y| <= w`.
/// Returns an empty range `(1, 0)` when there is none.
fn box_range(p: IVec2, e: IVec2, w: i128, lo0: i128, hi0: Option<i128>) -> (i128, i128) {
    let mut lo = lo0;
    let mut hi = hi0.unwrap_or(i128::MAX);
    for (pc, ec) in [(p.x as i128, e.x as i128), (p.y as i128, e.y as i128)] {
        if ec == 0 {
            if pc.abs() > w {
                return (1, 0);
            }
            continue;
        }
        let (a, b) = if ec > 0 {
            (ceil_div(-w - pc, ec), (w - pc).div_euclid(ec))
        } else {
            (ceil_div(w - pc, ec), floor_div(-w - pc, ec))
        };
        lo = lo.max(a);
        hi = hi.min(b);
    }
    if lo > hi {
        (1, 0)
    } else {
        (lo, hi)
    }
}

fn box_range_line(p: IVec2, e: IVec2, w: i128) -> (i128, i128) {
    let (lo, hi) = box_range(p, e, w, i128::MIN / 4, None);
    if lo > hi {
        (1, 0)
    } else {
        (lo, hi)
    }
}

fn floor_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: i128, b: i128) -> i128 {
    -floor_div(-a, b)
}

/// One hull step from a boundary point.
enum Step {
    /// The point lies on a closed boundary ray and ends the chain.
    End,
    /// Next edge direction (primitive) and its length, `None` if infinite.
    Edge { dir: IVec2, len: Option<i64> },
}

/// Boundary walker for a non-degenerate cone.
pub(crate) struct Walker<'a> {
    cone: &'a LatticeCone,
}

impl<'a> Walker<'a> {
    pub(crate) fn new(cone: &'a LatticeCone) -> Self {
        Walker { cone }
    }

    /// `v ^ d0`, positive strictly inside the left side.
    fn lf(&self, v: IVec2) -> Surd {
        self.cone.left().direction().wedge_from(v)
    }

    /// `v ^ d1`, negative strictly inside the right side.
    fn rf(&self, v: IVec2) -> Surd {
        self.cone.right().direction().wedge_from(v)
    }

    fn cw_step(&self, p: IVec2) -> Result<Step> {
        let rp = self.rf(p);
        if is_zero_surd(&rp) {
            return Ok(Step::End);
        }
        let w0 = wedge_partner(p, -1)?;
        let closed = self.cone.right().closed();
        let t = min_step(&self.rf(w0), &rp, closed)?;
        let q = w0.checked_axpy(t, p)?;
        let e = q.checked_sub(p)?;
        let beta = self.rf(e);
        let len = match beta.signum() {
            Ordering::Greater => {
                let k = max_step(&rp, &beta, closed)?;
                Some(i64::try_from(k).map_err(|_| Error::Overflow)?)
            }
            Ordering::Equal => None,
            Ordering::Less => return Err(Error::Unsupported("inconsistent hull edge".to_string())),
        };
        Ok(Step::Edge { dir: e, len })
    }

    fn ccw_step(&self, p: IVec2) -> Result<Step> {
        let lp = self.lf(p);
        if is_zero_surd(&lp) {
            return Ok(Step::End);
        }
        let w0 = wedge_partner(p, 1)?;
        let closed = self.cone.left().closed();
        let t = min_step(&self.lf(w0), &lp, closed)?;
        let q = w0.checked_axpy(t, p)?;
        let e = q.checked_sub(p)?;
        let beta = self.lf(e);
        let len = match beta.signum() {
            Ordering::Less => {
                let k = max_step(&lp.neg(), &beta.neg(), closed)?;
                Some(i64::try_from(k).map_err(|_| Error::Overflow)?)
            }
            Ordering::Equal => None,
            Ordering::Greater => return Err(Error::Unsupported("inconsistent hull edge".to_string())),
        };
        Ok(Step::Edge { dir: e, len })
    }

    /// A lattice vector `n` with `n ^ d0 > 0` and `n ^ d1 > 0`, so `v -> n ^ v`
    /// is positive on the cone.
    fn level_normal(&self) -> Result<IVec2> {
        for r in 1..=1_000_000i64 {
            for v in ring(r) {
                if self.lf(v).signum() == Ordering::Less
                    && self.rf(v).signum() == Ordering::Less
                    && v.is_primitive()
                {
                    return Ok(-v);
                }
            }
        }
        Err(Error::Unsupported("cone too narrow for the level search".to_string()))
    }

    /// The lattice point of the cone minimizing `n ^ v`, the most clockwise
    /// one among ties. It is a vertex of the hull boundary.
    fn level_seed(&self, n: IVec2) -> Result<IVec2> {
        let mut bound = None;
        'outer: for r in 1..=1_000_000i64 {
            for v in ring(r) {
                if self.cone.contains(v) {
                    bound = Some(n.wedge(v));
                    break 'outer;
                }
            }
        }
        let bound = bound.ok_or_else(|| Error::Unsupported("cone too narrow for the level search".to_string()))?;
        let base = wedge_partner(n, 1)?;
        let ln = self.lf(n);
        let rn = self.rf(n);
        for k in 1..=bound {
            let vk = IVec2::from_wide(base.x as i128 * k, base.y as i128 * k)?;
            let lo = min_step(&self.lf(vk), &ln, self.cone.left().closed())?;
            let hi = max_step(&self.rf(vk), &rn, self.cone.right().closed())?;
            if lo <= hi {
                return vk.checked_axpy(hi, n);
            }
        }
        Err(Error::Unsupported("level search failed".to_string()))
    }

    /// Walks one side of the boundary from `seed`, stopping at the end of
    /// the chain or once the level exceeds `fmax`. Returns segments in walk
    /// order and whether the walk was cut short.
    fn walk(&self, seed: IVec2, clockwise: bool, n: IVec2, fmax: i128) -> Result<(Vec<Segment>, bool)> {
        let mut segs = Vec::new();
        let mut p = seed;
        for _ in 0..MAX_STEPS {
            if n.wedge(p) > fmax {
                return Ok((segs, true));
            }
            let step = if clockwise { self.cw_step(p)? } else { self.ccw_step(p)? };
            match step {
                Step::End => {
                    segs.push(if clockwise {
                        Segment::RightBoundary { point: p }
                    } else {
                        Segment::LeftBoundary { point: p }
                    });
                    return Ok((segs, false));
                }
                Step::Edge { dir, len: None } => {
                    segs.push(if clockwise {
                        Segment::RightRay { vertex: p, out: dir }
                    } else {
                        Segment::LeftRay { vertex: p, out: dir }
                    });
                    return Ok((segs, false));
                }
                Step::Edge { dir, len: Some(k) } => {
                    let q = p.checked_axpy(k as i128, dir)?;
                    segs.push(if clockwise {
                        Segment::Finite { start: p, dir, len: k }
                    } else {
                        Segment::Finite { start: q, dir: -dir, len: k }
                    });
                    p = q;
                }
            }
        }
        Err(Error::Unsupported("hull walk exceeded its step budget".to_string()))
    }
}

/// Lattice vectors with sup-norm exactly `r`.
fn ring(r: i64) -> impl Iterator<Item = IVec2> {
    let side = (-r..=r).flat_map(move |t| {
        [IVec2::new(t, r), IVec2::new(t, -r), IVec2::new(r, t), IVec2::new(-r, t)]
    });
    side
}

/// Boundary chain of the hull of the integer points of a cone, restricted
/// to primitive points inside a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sail {
    /// Points of `B` with coordinates bounded by the window, in `≼` order.
    pub points: Vec<PrimVec>,
    /// Edges with at least one listed point.
    pub edges: Vec<SailEdge>,
    pub window: u64,
    pub left_end: EndKind,
    pub right_end: EndKind,
    /// Every point of `B` is listed.
    pub complete: bool,
    /// Every point lying on a finite edge is listed.
    pub finite_part_complete: bool,
    /// No point of `B` lies in the window.
    pub empty: bool,
    /// Endpoints of `B` lying on closed rays.
    pub boundary: Vec<PrimVec>,
    pub(crate) chain: Vec<Segment>,
    pub(crate) left_truncated: bool,
    pub(crate) right_truncated: bool,
}

/// An edge of the sail with the range of listed points it carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SailEdge {
    /// Index of the first listed point on the edge.
    pub start: usize,
    /// Index of the last listed point on the edge.
    pub end: usize,
    pub finite: bool,
    pub kind: EdgeKind,
    /// Primitive direction of the supporting line, oriented left to right.
    pub direction: IVec2,
    /// All primitive points of the edge are listed.
    pub fully_listed: bool,
}

impl Sail {
    /// True when `w` is an endpoint on a closed ray.
    pub fn is_boundary_point(&self, w: PrimVec) -> bool {
        self.boundary.contains(&w)
    }

    /// Listed points not on closed rays, the window part of `Int B`.
    pub fn interior_points(&self) -> Vec<PrimVec> {
        self.points.iter().copied().filter(|p| !self.boundary.contains(p)).collect()
    }

    fn from_chain(
        chain: Vec<Segment>,
        window: u64,
        left_end: EndKind,
        right_end: EndKind,
        left_truncated: bool,
        right_truncated: bool,
        boundary: Vec<PrimVec>,
    ) -> Sail {
        let w = window as i128;
        let mut points: Vec<PrimVec> = Vec::new();
        let mut edges = Vec::new();
        let mut all_full = !left_truncated && !right_truncated;
        let mut finite_full = all_full;
        for seg in &chain {
            let (pts, full) = seg.window_points(w);
            if !full {
                all_full = false;
                if seg.kind() == EdgeKind::Finite {
                    finite_full = false;
                }
            }
            if pts.is_empty() {
                continue;
            }
            let mut start = points.len();
            for (i, v) in pts.iter().enumerate() {
                let pv = PrimVec::try_from_vec(*v).expect("listed points are primitive");
                if i == 0 && points.last() == Some(&pv) {
                    start = points.len() - 1;
                    continue;
                }
                points.push(pv);
            }
            edges.push(SailEdge {
                start,
                end: points.len() - 1,
                finite: seg.kind() == EdgeKind::Finite,
                kind: seg.kind(),
                direction: seg.direction(),
                fully_listed: full,
            });
        }
        let empty = points.is_empty();
        Sail {
            points,
            edges,
            window,
            left_end,
            right_end,
            complete: all_full,
            finite_part_complete: finite_full,
            empty,
            boundary,
            chain,
            left_truncated,
            right_truncated,
        }
    }
}

fn end_kind(c: &LatticeCone, left: bool) -> EndKind {
    let r = if left { c.left() } else { c.right() };
    if !r.direction().is_rational() {
        EndKind::Irrational
    } else if r.closed() {
        EndKind::Closed
    } else {
        EndKind::OpenRay
    }
}

fn closed_boundary(c: &LatticeCone) -> Vec<PrimVec> {
    let mut b = Vec::new();
    if c.left().closed() {
        b.extend(c.left().direction().as_lattice());
    }
    if c.right().closed() {
        b.extend(c.right().direction().as_lattice());
    }
    b
}

/// The ordered primitive points of the hull boundary of the integer points
/// of `c` with coordinates bounded by `window`.
pub fn sail_points(c: &LatticeCone, window: u64) -> Result<Sail> {
    if window == 0 {
        return Err(Error::OutOfRange("window must be at least 1".to_string()));
    }
    let le = end_kind(c, true);
    let re = end_kind(c, false);
    let boundary = closed_boundary(c);
    if c.is_degenerate() {
        let d0 = c
            .left()
            .direction()
            .as_lattice()
            .ok_or_else(|| Error::Unsupported("half-plane bounded by an irrational line".to_string()))?
            .vec();
        let chain = match (c.left().closed(), c.right().closed()) {
            (true, true) => vec_of([
                Segment::LeftBoundary { point: d0 },
                Segment::Finite { start: d0, dir: -d0, len: 2 },
                Segment::RightBoundary { point: -d0 },
            ]),
            (true, false) => vec_of([Segment::LeftBoundary { point: d0 }]),
            (false, true) => vec_of([Segment::RightBoundary { point: -d0 }]),
            (false, false) => {
                // Lattice points with v ^ d0 = 1, i.e. d0 ^ v = -1.
                let base = wedge_partner(d0, -1)?;
                vec_of([Segment::Line { base, dir: -d0 }])
            }
        };
        return Ok(Sail::from_chain(chain, window, le, re, false, false, boundary));
    }
    let walker = Walker::new(c);
    let n = walker.level_normal()?;
    let seed = walker.level_seed(n)?;
    let fmax = (n.x.unsigned_abs() as i128 + n.y.unsigned_abs() as i128) * window as i128;
    let (mut left, lt) = walker.walk(seed, false, n, fmax)?;
    let (right, rt) = walker.walk(seed, true, n, fmax)?;
    left.reverse();
    left.extend(right);
    Ok(Sail::from_chain(left, window, le, re, lt, rt, boundary))
}

fn vec_of<const N: usize>(a: [Segment; N]) -> Vec<Segment> {
    a.into_iter().collect()
}

/// Whether `w`, in the interior of `c`, lies strictly inside the hull of
/// the integer points of `c`, equivalently whether `w - v` lies in `c` for
/// some integer point `v` of `c`.
pub fn is_interior_point(c: &LatticeCone, w: PrimVec) -> Result<bool> {
    let wv = w.vec();
    if !c.contains_interior(wv) {
        return Err(Error::NotInteriorToCone);
    }
    if c.is_degenerate() {
        if c.left().closed() || c.right().closed() {
            return Ok(true);
        }
        let d0 = c
            .left()
            .direction()
            .as_lattice()
            .ok_or_else(|| Error::Unsupported("half-plane bounded by an irrational line".to_string()))?;
        return Ok(wv.wedge(d0.vec()) >= 2);
    }
    let walker = Walker::new(c);
    let n = walker.level_normal()?;
    let seed = walker.level_seed(n)?;
    let clockwise = match seed.wedge(wv).cmp(&0) {
        Ordering::Equal => return Ok(false),
        Ordering::Less => true,
        Ordering::Greater => false,
    };
    let mut p = seed;
    for _ in 0..MAX_STEPS {
        let step = if clockwise { walker.cw_step(p)? } else { walker.ccw_step(p)? };
        let (dir, len) = match step {
            Step::End => return Err(Error::NotInteriorToCone),
            Step::Edge { dir, len } => (dir, len),
        };
        let end = match len {
            Some(k) => Some(p.checked_axpy(k as i128, dir)?),
            None => None,
        };
        let spans = match end {
            None => true,
            Some(q) => {
                if clockwise {
                    wv.wedge(q) <= 0
                } else {
                    q.wedge(wv) <= 0
                }
            }
        };
        if spans {
            let rel = wv - p;
            let side = if clockwise { dir.wedge(rel) } else { rel.wedge(dir) };
            return Ok(side > 0);
        }
        p = end.expect("bounded edge");
    }
    Err(Error::Unsupported("hull walk exceeded its step budget".to_string()))
}

/// Points of a sail carried by a selected family of edges, with the
/// extremities of that family when they exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePointSet {
    /// Listed points in `≼` order.
    pub points: Vec<PrimVec>,
    /// First point of the family, when the family is bounded on the left.
    pub left_extremity: Option<PrimVec>,
    /// Last point of the family, when the family is bounded on the right.
    pub right_extremity: Option<PrimVec>,
    /// Every point of the family is listed.
    pub complete: bool,
}

impl EdgePointSet {
    /// The extremities, which form the boundary of the point set.
    pub fn extremities(&self) -> Vec<PrimVec> {
        let mut v: Vec<PrimVec> = self.left_extremity.into_iter().collect();
        if let Some(r) = self.right_extremity {
            if !v.contains(&r) {
                v.push(r);
            }
        }
        v
    }
}

/// Points of the sail carried by the edges selected by `keep`.
pub fn edge_points(s: &Sail, keep: impl Fn(EdgeKind, IVec2) -> bool) -> EdgePointSet {
    let w = s.window as i128;
    let mut points: Vec<PrimVec> = Vec::new();
    let mut complete = true;
    let mut first: Option<&Segment> = None;
    let mut last: Option<&Segment> = None;
    let mut first_idx = 0;
    let mut last_idx = 0;
    for (i, seg) in s.chain.iter().enumerate() {
        if !keep(seg.kind(), seg.direction()) {
            continue;
        }
        if first.is_none() {
            first = Some(seg);
            first_idx = i;
        }
        last = Some(seg);
        last_idx = i;
        let (pts, full) = seg.window_points(w);
        complete &= full;
        for v in pts {
            let pv = PrimVec::try_from_vec(v).expect("listed points are primitive");
            if points.last() != Some(&pv) {
                points.push(pv);
            }
        }
    }
    let left_known = !(s.left_truncated && first_idx == 0);
    let right_known = !(s.right_truncated && last_idx + 1 == s.chain.len());
    if first.is_some() {
        complete &= !s.left_truncated && !s.right_truncated;
    }
    let left_extremity = first
        .filter(|_| left_known)
        .and_then(|g| g.first())
        .and_then(|v| PrimVec::try_from_vec(v).ok());
    let right_extremity = last
        .filter(|_| right_known)
        .and_then(|g| g.last())
        .and_then(|v| PrimVec::try_from_vec(v).ok());
    let unbounded = first.map(|g| !g.is_bounded()).unwrap_or(false) || last.map(|g| !g.is_bounded()).unwrap_or(false);
    EdgePointSet { points, left_extremity, right_extremity, complete: complete && !unbounded }
}

/// Points lying on finite edges, optionally dropping edges parallel to a
/// given direction.
pub fn finite_edge_points(s: &Sail, exclude_parallel_to: Option<PrimVec>) -> EdgePointSet {
    edge_points(s, |kind, dir| {
        kind == EdgeKind::Finite && exclude_parallel_to.map_or(true, |e| dir.wedge(e.vec()) != 0)
    })
}
