//! Slow, direct reference computations used to cross-check the kernel in
//! tests. Nothing here shares code with the kernel.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Greedy minus-sign continued fraction of `p/q` by rational ceilings.
pub fn greedy_neg_cf(p: i64, q: i64) -> Vec<i64> {
    let mut x = BigRational::new(BigInt::from(p), BigInt::from(q));
    let mut out = Vec::new();
    loop {
        let a = x.ceil();
        out.push(i64::try_from(a.to_integer()).unwrap());
        let rest = &a - &x;
        if rest.is_zero() {
            return out;
        }
        x = rest.recip();
    }
}

/// Direct right-to-left evaluation of `a_0 - 1/(a_1 - ...)`.
pub fn eval_neg_cf(a: &[i64]) -> BigRational {
    let mut x = BigRational::from_integer(BigInt::from(*a.last().unwrap()));
    for &ai in a[..a.len() - 1].iter().rev() {
        x = BigRational::from_integer(BigInt::from(ai)) - x.recip();
    }
    x
}

pub type Mat = [[i64; 2]; 2];

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    [
        [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
        [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
    ]
}

pub fn mat_inv(a: &Mat) -> Mat {
    [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]
}

/// Determinant of an integer matrix by fraction-free elimination (Bareiss).
pub fn det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Order of `g` in `Z/p`.
pub fn additive_order(g: i64, p: i64) -> i64 {
    let g = g.rem_euclid(p);
    (1..=p).find(|k| (k * g) % p == 0).unwrap()
}

pub fn wedge(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// A rational cone given by two primitive directions with open/closed flags,
/// swept clockwise from `left` to `right` through an angle below a half-turn.
#[derive(Debug, Clone, Copy)]
pub struct RatCone {
    pub left: (i64, i64),
    pub left_closed: bool,
    pub right: (i64, i64),
    pub right_closed: bool,
}

impl RatCone {
    pub fn contains(&self, v: (i64, i64)) -> bool {
        if v == (0, 0) {
            return false;
        }
        let l = wedge(v, self.left);
        let r = wedge(v, self.right);
        let on_left = l == 0 && v.0 * self.left.0 + v.1 * self.left.1 > 0;
        let on_right = r == 0 && v.0 * self.right.0 + v.1 * self.right.1 > 0;
        if on_left {
            return self.left_closed;
        }
        if on_right {
            return self.right_closed;
        }
        l > 0 && r < 0
    }

    pub fn contains_interior(&self, v: (i64, i64)) -> bool {
        wedge(v, self.left) > 0 && wedge(v, self.right) < 0
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Convex hull (counterclockwise, no collinear points) by monotone chain.
pub fn convex_hull(mut pts: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn strictly_inside(hull: &[(i64, i64)], v: (i64, i64)) -> bool {
    if hull.len() < 3 {
        return false;
    }
    (0..hull.len()).all(|i| cross(hull[i], hull[(i + 1) % hull.len()], v) > 0)
}

/// Primitive lattice points of the cone with sup-norm at most `window` that
/// are not strictly inside the hull of all lattice points of the cone with
/// sup-norm at most `reach`, sorted by angle from the left ray.
pub fn brute_sail(c: &RatCone, window: i64, reach: i64) -> Vec<(i64, i64)> {
    let mut pts = Vec::new();
    for x in -reach..=reach {
        for y in -reach..=reach {
            if c.contains((x, y)) {
                pts.push((x, y));
            }
        }
    }
    let hull = convex_hull(pts.clone());
    let mut out: Vec<(i64, i64)> = pts
        .into_iter()
        .filter(|&(x, y)| x.abs() <= window && y.abs() <= window && gcd(x, y) == 1)
        .filter(|&v| !strictly_inside(&hull, v))
        .collect();
    out.sort_by(|a, b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if wedge(*a, *b) < 0 {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    out
}

/// Existence of an integer point `v` of the cone with `w - v` in the cone,
/// scanning the lattice lines parallel to one boundary ray.
pub fn exists_split(c: &RatCone, w: (i64, i64)) -> bool {
    // Lines v ^ d0 = k for 0 <= k <= w ^ d0; on each, v = base_k + t d0.
    let d0 = c.left;
    let kmax = wedge(w, d0);
    let (s, t) = bezout(d0.0, d0.1);
    // d0 ^ (−t, s) = d0.0 s + d0.1 t = 1, so b = (t, −s) has b ^ d0 = 1.
    let b = (t, -s);
    for k in 0..=kmax {
        let base = (b.0 * k, b.1 * k);
        // Points base + t d0 satisfy the two constraints against d1:
        // v ^ d1 <= 0 and (w - v) ^ d1 <= 0, each strict when open.
        let d1 = c.right;
        let a0 = wedge(base, d1);
        let beta = wedge(d0, d1);
        // a0 + t beta <= 0 and wedge(w, d1) - a0 - t beta <= 0, beta < 0.
        let wd = wedge(w, d1);
        let lo_num = -a0; // t beta <= -a0  =>  t >= -a0 / beta (beta < 0)
        let hi_num = wd - a0; // t beta >= wd - a0  =>  t <= (wd - a0)/beta
        let lo = ceil_div(lo_num, beta);
        let hi = floor_div(hi_num, beta);
        let (lo, hi) = (lo.min(hi), lo.max(hi));
        // Only the ends of the interval can fail strictness or hit 0 or w.
        let near_ends = ((lo - 1)..=(lo + 2).min(hi + 1)).chain((hi - 2).max(lo + 3)..=(hi + 1));
        for t in near_ends {
            let v = (base.0 + t * d0.0, base.1 + t * d0.1);
            let r = (w.0 - v.0, w.1 - v.1);
            if c.contains(v) && c.contains(r) {
                return true;
            }
        }
    }
    false
}

fn floor_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    if a % b != 0 && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}

/// Coefficients `(s, t)` with `a s + b t = 1` for coprime `a`, `b`.
pub fn bezout(a: i64, b: i64) -> (i64, i64) {
    if b == 0 {
        return (a.signum(), 0);
    }
    let (s, t) = bezout(b, a.rem_euclid(b));
    let q = a.div_euclid(b);
    (t, s - q * t)
}

/// All `B` in `SL2(Z)` with entries bounded by `bound` and `B^n = m`.
pub fn brute_roots(m: &Mat, n: u32, bound: i64) -> Vec<Mat> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                for d in -bound..=bound {
                    if a * d - b * c != 1 {
                        continue;
                    }
                    let cand = [[a, b], [c, d]];
                    let mut p = cand;
                    for _ in 1..n {
                        p = mat_mul(&p, &cand);
                    }
                    if p == *m {
                        out.push(cand);
                    }
                }
            }
        }
    }
    out
}

/// True when arcs `(a, b)` and `(c, d)` on a circle cross.
fn chords_cross(a: u32, b: u32, c: u32, d: u32) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    let inside = |x: u32| a < x && x < b;
    inside(c) != inside(d)
}

/// All perfect matchings of `0..n` on a circle.
pub fn all_matchings(points: &[u32]) -> Vec<Vec<(u32, u32)>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let first = points[0];
    let mut out = Vec::new();
    for k in 1..points.len() {
        let rest: Vec<u32> = points[1..].iter().copied().filter(|&p| p != points[k]).collect();
        for mut m in all_matchings(&rest) {
            m.push((first, points[k]));
            out.push(m);
        }
    }
    out
}

/// Arc families on a punctured disk with `2n` boundary points, counted as
/// non-crossing matchings times the regions of their complement.
pub fn brute_disk(n: u32) -> usize {
    let pts: Vec<u32> = (0..2 * n).collect();
    all_matchings(&pts)
        .into_iter()
        .filter(|m| {
            m.iter().enumerate().all(|(i, &(a, b))| m[i + 1..].iter().all(|&(c, d)| !chords_cross(a, b, c, d)))
        })
        .map(|m| m.len() + 1)
        .sum()
}

/// Arc families on the annulus with `2 n0` inner and `2 n1` outer points
/// using at least one arc across, up to diffeomorphisms fixing the boundary.
/// Inner points are `0..2 n0` and outer points `2 n0..2 n0 + 2 n1`, both
/// numbered counterclockwise. Every perfect matching is tested for
/// realizability; the twist along the core acts transitively on the windings
/// of a realizable matching, so each one is a single class.
pub fn brute_annulus(n0: u32, n1: u32) -> usize {
    let m0 = 2 * n0;
    let m1 = 2 * n1;
    let pts: Vec<u32> = (0..m0 + m1).collect();
    all_matchings(&pts)
        .into_iter()
        .filter(|m| {
            let arcs: Vec<(u32, u32)> = m.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            let cross: Vec<(u32, u32)> = arcs.iter().copied().filter(|&(a, b)| a < m0 && b >= m0).collect();
            if cross.is_empty() {
                return false;
            }
            let same: Vec<(u32, u32)> = arcs.iter().copied().filter(|&(a, b)| (a < m0) == (b < m0)).collect();
            // Same-circle chords on one circle must not cross each other.
            for (i, &(a, b)) in same.iter().enumerate() {
                for &(c, d) in &same[i + 1..] {
                    if (a < m0) == (c < m0) && chords_cross(a, b, c, d) {
                        return false;
                    }
                }
            }
            // A same-circle arc cuts off a disk holding no crossing endpoint.
            for &(a, b) in &same {
                let ends = cross.iter().map(|&(x, y)| if a < m0 { x } else { y });
                let inside = ends.clone().filter(|&e| a < e && e < b).count();
                if inside != 0 && inside != cross.len() {
                    return false;
                }
            }
            // Disjoint crossing arcs keep the counterclockwise cyclic order.
            let mut by_inner = cross.clone();
            by_inner.sort();
            let outer: Vec<u32> = by_inner.iter().map(|&(_, y)| y).collect();
            let mut sorted = outer.clone();
            sorted.sort();
            let c = outer.len();
            (0..c).any(|r| (0..c).all(|k| outer[k] == sorted[(k + r) % c]))
        })
        .count()
}

/// Lattice points `v` with `|x|, |y| <= r` in a cone, for sampling.
pub fn lattice_points_in(c: &RatCone, r: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            if c.contains((x, y)) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Slope `x/y` of `d` written as `x e1 + y e2`.
pub fn slope_in_basis(d: (i64, i64), e1: (i64, i64), e2: (i64, i64)) -> BigRational {
    BigRational::new(BigInt::from(wedge(d, e2)), BigInt::from(wedge(e1, d)))
}

/// `n` strictly convex rational cones with direction coordinates in
/// `[-r, r]` and random open/closed flags, reproducible from `seed`.
pub fn random_cones(seed: u64, n: usize, r: i64) -> Vec<RatCone> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let mut v = || loop {
            let (x, y) = (rng.gen_range(-r..=r), rng.gen_range(-r..=r));
            if gcd(x, y) == 1 {
                return (x, y);
            }
        };
        let (a, b) = (v(), v());
        let w = wedge(a, b);
        if w == 0 {
            continue;
        }
        let (left, right) = if w < 0 { (a, b) } else { (b, a) };
        out.push(RatCone { left, left_closed: rng.gen(), right, right_closed: rng.gen() });
    }
    out
}

/// Random products of at most `len` generators of `SL2(Z)`.
pub fn random_conjugators(seed: u64, n: usize, len: usize) -> Vec<Mat> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let gens: [Mat; 4] = [[[1, 1], [0, 1]], [[1, -1], [0, 1]], [[0, -1], [1, 0]], [[1, 0], [1, 1]]];
    (0..n)
        .map(|_| {
            let k = rng.gen_range(0..=len);
            (0..k).fold([[1, 0], [0, 1]], |m, _| mat_mul(&m, &gens[rng.gen_range(0..4)]))
        })
        .collect()
}
