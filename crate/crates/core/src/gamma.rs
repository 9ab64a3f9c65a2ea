//! The alternating subset sum γ over ordered sail points and the invariant
//! sets built from it.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::sail::{EdgePointSet, IVec2, PrimVec, Sail};
use crate::{Error, Result, DEFAULT_ENUM_CAP};

/// Upper bound on the number of simultaneous dynamic-programming states.
const MAX_DP_STATES: usize = 1 << 22;

/// Cardinality parity of a subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// True when `w ≺ w'`: `w ^ w' < 0`, or `w' = -w` across a half-plane.
pub fn precedes(w: PrimVec, w2: PrimVec) -> bool {
    let d = w.wedge(w2);
    d < 0 || (d == 0 && w2 == w.neg())
}

/// Finite subset of a sail listed in increasing `≼` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OrderedSubset {
    points: Vec<PrimVec>,
}

impl OrderedSubset {
    pub fn new(points: Vec<PrimVec>) -> Result<Self> {
        if points.windows(2).all(|p| precedes(p[0], p[1])) {
            Ok(OrderedSubset { points })
        } else {
            Err(Error::SubsetNotSorted)
        }
    }

    pub fn empty() -> Self {
        OrderedSubset::default()
    }

    pub fn points(&self) -> &[PrimVec] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn alternating_sum(points: &[PrimVec]) -> Result<IVec2> {
    let (mut x, mut y) = (0i128, 0i128);
    for (j, p) in points.iter().enumerate() {
        let s = if j % 2 == 0 { 1 } else { -1 };
        x += s * p.x() as i128;
        y += s * p.y() as i128;
    }
    IVec2::from_wide(x, y)
}

/// `γ(Q) = w_1 - w_2 + w_3 - ...`, zero for the empty set.
pub fn gamma(q: &OrderedSubset) -> Result<IVec2> {
    alternating_sum(&q.points)
}

/// `γ` of a point list, checking the order first.
pub fn gamma_of(points: &[PrimVec]) -> Result<IVec2> {
    if !points.windows(2).all(|p| precedes(p[0], p[1])) {
        return Err(Error::SubsetNotSorted);
    }
    alternating_sum(points)
}

/// The relative Euler class `2γ(R)` attached to a retournement locus `R`.
pub fn euler_from_retournement(r: &OrderedSubset) -> Result<IVec2> {
    let g = gamma(r)?;
    IVec2::from_wide(2 * g.x as i128, 2 * g.y as i128)
}

/// Distinct values of `γ` over subsets of a given parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaValues {
    pub count: usize,
    pub values: BTreeSet<IVec2>,
}

fn step(v: IVec2, w: PrimVec, parity: Parity) -> IVec2 {
    match parity {
        Parity::Even => IVec2::new(v.x + w.x(), v.y + w.y()),
        Parity::Odd => IVec2::new(v.x - w.x(), v.y - w.y()),
    }
}

/// Distinct `γ` values over all subsets of `points` (given in `≼` order)
/// with the requested cardinality parity, by a forward sweep over the
/// reachable (value, parity) states.
pub fn gamma_value_count(points: &[PrimVec], parity: Parity) -> Result<GammaValues> {
    if !points.windows(2).all(|p| precedes(p[0], p[1])) {
        return Err(Error::SubsetNotSorted);
    }
    let mut states: BTreeSet<(IVec2, Parity)> = BTreeSet::new();
    states.insert((IVec2::ZERO, Parity::Even));
    for &w in points {
        let added: Vec<(IVec2, Parity)> = states.iter().map(|&(v, p)| (step(v, w, p), p.flip())).collect();
        states.extend(added);
        if states.len() > MAX_DP_STATES {
            return Err(Error::EnumerationGuard { size: points.len(), cap: DEFAULT_ENUM_CAP });
        }
    }
    let values: BTreeSet<IVec2> = states.into_iter().filter(|s| s.1 == parity).map(|s| s.0).collect();
    Ok(GammaValues { count: values.len(), values })
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::EnumerationGuard { size: n, cap })
    } else {
        Ok(())
    }
}

/// Same as [`gamma_value_count`] by listing every subset; refuses more than
/// `cap` points.
pub fn gamma_values_exhaustive(points: &[PrimVec], parity: Parity, cap: usize) -> Result<GammaValues> {
    check_cap(points.len(), cap)?;
    let mut values = BTreeSet::new();
    let mut chosen = Vec::with_capacity(points.len());
    for mask in 0u64..(1u64 << points.len()) {
        if Parity::of(mask.count_ones() as usize) != parity {
            continue;
        }
        chosen.clear();
        chosen.extend((0..points.len()).filter(|i| mask >> i & 1 == 1).map(|i| points[i]));
        values.insert(gamma_of(&chosen)?);
    }
    Ok(GammaValues { count: values.len(), values })
}

/// The sets `X_u` and `X_v` of a sail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerSets {
    /// `2γ(Q)` over subsets `Q` of the endpoint set.
    pub xu: BTreeSet<IVec2>,
    /// `2γ(Q)` over listed finite subsets meeting the interior of `B`.
    pub xv: BTreeSet<IVec2>,
    /// `X_v` is exact, not only its window part.
    pub xv_complete: bool,
}

fn doubled(v: IVec2) -> IVec2 {
    IVec2::new(2 * v.x, 2 * v.y)
}

/// `X_u = {2γ(Q) : Q ⊆ ∂B}` and `X_v = {2γ(Q) : Q meets Int B}` over the
/// listed points of the sail.
pub fn xu_xv(b: &Sail) -> Result<EulerSets> {
    let bd: Vec<PrimVec> = b.points.iter().copied().filter(|p| b.is_boundary_point(*p)).collect();
    let xu = subsets_of_small(&bd)?.into_iter().map(doubled).collect();
    let interior: Vec<bool> = b.points.iter().map(|p| !b.is_boundary_point(*p)).collect();
    let vals = meets_interior_values(&b.points, &interior, None)?;
    let xv = vals.into_iter().map(doubled).collect();
    Ok(EulerSets { xu, xv, xv_complete: b.complete })
}

/// γ over every subset of a list of at most two points.
fn subsets_of_small(points: &[PrimVec]) -> Result<BTreeSet<IVec2>> {
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << points.len()) {
        let chosen: Vec<PrimVec> = (0..points.len()).filter(|i| mask >> i & 1 == 1).map(|i| points[i]).collect();
        out.insert(gamma_of(&chosen)?);
    }
    Ok(out)
}

/// γ values of subsets containing at least one flagged point, optionally
/// restricted to one parity.
fn meets_interior_values(points: &[PrimVec], flagged: &[bool], parity: Option<Parity>) -> Result<BTreeSet<IVec2>> {
    if !points.windows(2).all(|p| precedes(p[0], p[1])) {
        return Err(Error::SubsetNotSorted);
    }
    let mut states: BTreeSet<(IVec2, Parity, bool)> = BTreeSet::new();
    states.insert((IVec2::ZERO, Parity::Even, false));
    for (&w, &f) in points.iter().zip(flagged) {
        let added: Vec<_> = states.iter().map(|&(v, p, m)| (step(v, w, p), p.flip(), m || f)).collect();
        states.extend(added);
        if states.len() > MAX_DP_STATES {
            return Err(Error::EnumerationGuard { size: points.len(), cap: DEFAULT_ENUM_CAP });
        }
    }
    Ok(states
        .into_iter()
        .filter(|s| s.2 && parity.map_or(true, |p| p == s.1))
        .map(|s| s.0)
        .collect())
}

/// The sets `X̂_u` and `X̂_v` of a solid torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolidEulerSets {
    /// `1 + 2 x(γ(Q))` over even subsets avoiding the interior of `B̂`.
    pub xu: BTreeSet<i64>,
    /// `1 + 2 x(γ(Q))` over even subsets meeting the interior of `B̂`.
    pub xv: BTreeSet<i64>,
    pub complete: bool,
}

/// `X̂_u` and `X̂_v` from the point set `B̂` and its extremities, projecting
/// by the first coordinate.
pub fn xu_xv_solid(bhat: &EdgePointSet) -> Result<SolidEulerSets> {
    let ext = bhat.extremities();
    let project = |v: IVec2| 1 + 2 * v.x;
    let bd: Vec<PrimVec> = bhat.points.iter().copied().filter(|p| ext.contains(p)).collect();
    let mut xu = BTreeSet::new();
    for mask in 0u32..(1 << bd.len()) {
        if mask.count_ones() % 2 == 0 {
            let chosen: Vec<PrimVec> = (0..bd.len()).filter(|i| mask >> i & 1 == 1).map(|i| bd[i]).collect();
            xu.insert(project(gamma_of(&chosen)?));
        }
    }
    let flagged: Vec<bool> = bhat.points.iter().map(|p| !ext.contains(p)).collect();
    let xv = meets_interior_values(&bhat.points, &flagged, Some(Parity::Even))?
        .into_iter()
        .map(project)
        .collect();
    Ok(SolidEulerSets { xu, xv, complete: bhat.complete })
}

/// Subsets of a sail realizing a prescribed Euler class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidates {
    pub subsets: Vec<OrderedSubset>,
    /// The sail was cut by its window, so subsets using unlisted points are missing.
    pub truncated: bool,
}

/// Every finite subset `Q` of the listed sail points with `2γ(Q) = chi`,
/// refusing more than `cap` points.
pub fn retournement_candidates(b: &Sail, chi: IVec2, cap: usize) -> Result<Candidates> {
    if chi.x % 2 != 0 || chi.y % 2 != 0 {
        return Err(Error::OddTarget);
    }
    let pts = &b.points;
    check_cap(pts.len(), cap)?;
    let target = IVec2::new(chi.x / 2, chi.y / 2);
    let n = pts.len();
    // reach[i][parity]: γ contributions available from points i.. when the
    // next chosen point enters with the given parity of prior picks.
    let mut reach: Vec<[BTreeSet<IVec2>; 2]> = Vec::with_capacity(n + 1);
    reach.resize_with(n + 1, || [BTreeSet::new(), BTreeSet::new()]);
    reach[n][0].insert(IVec2::ZERO);
    reach[n][1].insert(IVec2::ZERO);
    for i in (0..n).rev() {
        for par in [Parity::Even, Parity::Odd] {
            let pi = par as usize;
            let mut set = reach[i + 1][pi].clone();
            let rest = &reach[i + 1][par.flip() as usize];
            let w = step(IVec2::ZERO, pts[i], par);
            set.extend(rest.iter().map(|v| *v + w));
            reach[i][pi] = set;
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    dfs(pts, &reach, 0, IVec2::ZERO, Parity::Even, target, &mut chosen, &mut out);
    out.sort_by_key(|q: &OrderedSubset| q.len());
    Ok(Candidates { subsets: out, truncated: !b.complete })
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    pts: &[PrimVec],
    reach: &[[BTreeSet<IVec2>; 2]],
    i: usize,
    cur: IVec2,
    par: Parity,
    target: IVec2,
    chosen: &mut Vec<PrimVec>,
    out: &mut Vec<OrderedSubset>,
) {
    if !reach[i][par as usize].contains(&(target - cur)) {
        return;
    }
    if i == pts.len() {
        out.push(OrderedSubset { points: chosen.clone() });
        return;
    }
    dfs(pts, reach, i + 1, cur, par, target, chosen, out);
    chosen.push(pts[i]);
    dfs(pts, reach, i + 1, step(cur, pts[i], par), par.flip(), target, chosen, out);
    chosen.pop();
}

/// Number of subsets realizing each γ value, for diagnostics.
pub fn gamma_multiplicities(points: &[PrimVec]) -> Result<BTreeMap<IVec2, u64>> {
    if !points.windows(2).all(|p| precedes(p[0], p[1])) {
        return Err(Error::SubsetNotSorted);
    }
    let mut states: BTreeMap<(IVec2, Parity), u64> = BTreeMap::new();
    states.insert((IVec2::ZERO, Parity::Even), 1);
    for &w in points {
        let added: Vec<_> = states.iter().map(|(&(v, p), &c)| ((step(v, w, p), p.flip()), c)).collect();
        for (k, c) in added {
            *states.entry(k).or_insert(0) += c;
        }
    }
    let mut out = BTreeMap::new();
    for ((v, _), c) in states {
        *out.entry(v).or_insert(0) += c;
    }
    Ok(out)
}
