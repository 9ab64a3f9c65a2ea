use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::vec2::{IVec2, PrimVec};
use crate::arith::{QuadraticIrrational, Rational, Surd};
use crate::{Error, Result};

/// A half-line direction from the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Direction {
    /// The half-line through a primitive lattice vector.
    Lattice(PrimVec),
    /// The half-line through `(z, 1)` when `positive`, through `(-z, -1)` otherwise.
    Quadratic { slope: QuadraticIrrational, positive: bool },
}

impl Direction {
    pub fn lattice(x: i64, y: i64) -> Result<Self> {
        Ok(Direction::Lattice(PrimVec::new(x, y)?))
    }

    pub fn quadratic(slope: QuadraticIrrational, positive: bool) -> Self {
        Direction::Quadratic { slope, positive }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Direction::Lattice(_))
    }

    pub fn as_lattice(&self) -> Option<PrimVec> {
        match self {
            Direction::Lattice(p) => Some(*p),
            Direction::Quadratic { .. } => None,
        }
    }

    pub fn neg(&self) -> Direction {
        match self {
            Direction::Lattice(p) => Direction::Lattice(p.neg()),
            Direction::Quadratic { slope, positive } => {
                Direction::Quadratic { slope: slope.clone(), positive: !positive }
            }
        }
    }

    /// Exact value of `v ^ d` where `d` is the (unnormalized) direction vector.
    pub fn wedge_from(&self, v: IVec2) -> Surd {
        match self {
            Direction::Lattice(d) => Surd::integer(v.wedge(d.vec())),
            Direction::Quadratic { slope, positive } => {
                // v ^ s(z, 1) = s (v.x - v.y z) with z = (P + sqrt D) / Q.
                let s = if *positive { BigInt::one() } else { -BigInt::one() };
                let (vx, vy) = v.big();
                let q = slope.q();
                let a = Rational::new(&s * (&vx * q - &vy * slope.p()), q.clone());
                let b = Rational::new(-&s * &vy, q.clone());
                Surd { a, b, d: slope.d().clone() }
            }
        }
    }

    /// Sign of `v ^ d`.
    pub fn side_of(&self, v: IVec2) -> Ordering {
        match self {
            Direction::Lattice(d) => v.wedge(d.vec()).cmp(&0),
            Direction::Quadratic { slope, positive } => {
                let (vx, vy) = v.big();
                let s = slope.sign_of_affine(&vx, &vy);
                if *positive {
                    s
                } else {
                    s.reverse()
                }
            }
        }
    }

    /// True when `v` is a positive real multiple of the direction.
    pub fn contains_on_ray(&self, v: IVec2) -> bool {
        match self {
            Direction::Lattice(d) => v.wedge(d.vec()) == 0 && v.dot(d.vec()) > 0,
            Direction::Quadratic { .. } => false,
        }
    }

    /// Sign of `self ^ other` for the two direction vectors.
    pub fn wedge_sign(&self, other: &Direction) -> Ordering {
        match (self, other) {
            (Direction::Lattice(a), _) => other.side_of(a.vec()),
            (_, Direction::Lattice(b)) => self.side_of(b.vec()).reverse(),
            (
                Direction::Quadratic { slope: z0, positive: p0 },
                Direction::Quadratic { slope: z1, positive: p1 },
            ) => {
                // s0 (z0, 1) ^ s1 (z1, 1) = s0 s1 (z0 - z1).
                let ord = compare_quadratic(z0, z1);
                if p0 == p1 {
                    ord
                } else {
                    ord.reverse()
                }
            }
        }
    }

    /// True when the two directions are equal half-lines.
    pub fn same_ray(&self, other: &Direction) -> bool {
        self.wedge_sign(other) == Ordering::Equal && !self.opposite_ray(other)
    }

    /// True when the two directions are opposite half-lines of one line.
    pub fn opposite_ray(&self, other: &Direction) -> bool {
        match (self, other) {
            (Direction::Lattice(a), Direction::Lattice(b)) => a.vec() == -b.vec(),
            (
                Direction::Quadratic { slope: z0, positive: p0 },
                Direction::Quadratic { slope: z1, positive: p1 },
            ) => p0 != p1 && compare_quadratic(z0, z1) == Ordering::Equal,
            _ => false,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Lattice(p) => write!(f, "{p}"),
            Direction::Quadratic { slope, positive } => {
                if *positive {
                    write!(f, "({slope}, 1)")
                } else {
                    write!(f, "-({slope}, 1)")
                }
            }
        }
    }
}

/// Exact comparison of two quadratic irrationals, possibly from different fields.
pub(crate) fn compare_quadratic(z0: &QuadraticIrrational, z1: &QuadraticIrrational) -> Ordering {
    let s0 = z0.to_surd();
    let s1 = z1.to_surd();
    if let Some(s1r) = s1.rebase(&s0.d) {
        return s0.sub(&s1r).signum();
    }
    // z0 - z1 = X - Y with X = z0 - P1 / Q1 and Y = sqrt(D1) / Q1.
    let shift = Rational::new(z1.p().clone(), z1.q().clone());
    let x = s0.sub(&Surd::rational(shift));
    let y_sign = if z1.q().is_positive() { Ordering::Greater } else { Ordering::Less };
    let y_sq = Rational::new(z1.d().clone(), z1.q() * z1.q());
    let xs = x.signum();
    match (xs, y_sign) {
        (Ordering::Equal, _) => y_sign.reverse(),
        (Ordering::Less, Ordering::Greater) => Ordering::Less,
        (Ordering::Greater, Ordering::Less) => Ordering::Greater,
        (Ordering::Greater, _) => x.mul(&x).sub(&Surd::rational(y_sq)).signum(),
        (Ordering::Less, _) => Surd::rational(y_sq).sub(&x.mul(&x)).signum(),
    }
}

/// One boundary ray of a cone with its open/closed flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayBound {
    direction: Direction,
    closed: bool,
}

impl RayBound {
    /// A ray bound; an irrational ray is always open.
    pub fn new(direction: Direction, closed: bool) -> Result<Self> {
        if closed && !direction.is_rational() {
            return Err(Error::InvalidCone("an irrational ray carries no lattice point and cannot be closed".to_string()));
        }
        Ok(RayBound { direction, closed })
    }

    pub fn lattice(x: i64, y: i64, closed: bool) -> Result<Self> {
        RayBound::new(Direction::lattice(x, y)?, closed)
    }

    pub fn quadratic(slope: QuadraticIrrational, positive: bool) -> Self {
        RayBound { direction: Direction::quadratic(slope, positive), closed: false }
    }

    pub fn direction(&self) -> &Direction {
        &self.direction
    }

    pub fn closed(&self) -> bool {
        self.closed
    }
}

impl fmt::Display for RayBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.direction, if self.closed { "closed" } else { "open" })
    }
}

/// Convex cone swept clockwise from `left` to `right`, with angle in `(0, pi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeCone {
    left: RayBound,
    right: RayBound,
    degenerate: bool,
}

impl LatticeCone {
    pub fn new(left: RayBound, right: RayBound) -> Result<Self> {
        let ord = left.direction.wedge_sign(&right.direction);
        let degenerate = match ord {
            Ordering::Less => false,
            Ordering::Greater => {
                return Err(Error::InvalidCone("sweep from left to right exceeds a half-turn".to_string()))
            }
            Ordering::Equal => {
                if left.direction.opposite_ray(&right.direction) {
                    true
                } else {
                    return Err(Error::InvalidCone("left and right rays coincide".to_string()));
                }
            }
        };
        Ok(LatticeCone { left, right, degenerate })
    }

    /// Cone between two lattice directions.
    pub fn rational(left: (i64, i64), left_closed: bool, right: (i64, i64), right_closed: bool) -> Result<Self> {
        LatticeCone::new(
            RayBound::lattice(left.0, left.1, left_closed)?,
            RayBound::lattice(right.0, right.1, right_closed)?,
        )
    }

    pub fn left(&self) -> &RayBound {
        &self.left
    }

    pub fn right(&self) -> &RayBound {
        &self.right
    }

    /// True when the two rays are opposite, so the cone is a half-plane.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// The cone `-C`.
    pub fn negated(&self) -> LatticeCone {
        LatticeCone {
            left: RayBound { direction: self.left.direction.neg(), closed: self.left.closed },
            right: RayBound { direction: self.right.direction.neg(), closed: self.right.closed },
            degenerate: self.degenerate,
        }
    }

    /// Exact membership of a non-zero vector.
    pub fn contains(&self, v: IVec2) -> bool {
        let l = v_wedge_left(self, v);
        let r = self.right.direction.side_of(v);
        let on_left = self.left.direction.contains_on_ray(v);
        let on_right = self.right.direction.contains_on_ray(v);
        if on_left {
            return self.left.closed;
        }
        if on_right {
            return self.right.closed;
        }
        if self.degenerate {
            return l == Ordering::Greater;
        }
        l == Ordering::Greater && r == Ordering::Less
    }

    /// Membership in the interior.
    pub fn contains_interior(&self, v: IVec2) -> bool {
        let l = v_wedge_left(self, v);
        if self.degenerate {
            return l == Ordering::Greater;
        }
        l == Ordering::Greater && self.right.direction.side_of(v) == Ordering::Less
    }
}

/// Sign of `v ^ d0`, positive on the inner side of the left ray.
fn v_wedge_left(c: &LatticeCone, v: IVec2) -> Ordering {
    c.left.direction.side_of(v)
}

impl fmt::Display for LatticeCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} -> {}]", self.left, self.right)
    }
}

/// Membership test of a non-zero integer vector.
pub fn cone_contains(c: &LatticeCone, v: IVec2) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(c.contains(v))
}

/// Smallest integer `t` with `(alpha + t beta) / beta >= 0`, strict when `open`.
pub(crate) fn min_step(alpha: &Surd, beta: &Surd, closed: bool) -> Result<i128> {
    let r = alpha.neg().div(beta).ok_or(Error::Overflow)?;
    let t = if closed { r.ceil() } else { r.floor() + 1 };
    to_i128(&t)
}

/// Largest integer `k` with `alpha + k beta <= 0` (strict when open) for `beta > 0`.
pub(crate) fn max_step(alpha: &Surd, beta: &Surd, closed: bool) -> Result<i128> {
    let r = alpha.neg().div(beta).ok_or(Error::Overflow)?;
    let k = if closed { r.floor() } else { r.ceil() - 1 };
    to_i128(&k)
}

pub(crate) fn to_i128(b: &BigInt) -> Result<i128> {
    i128::try_from(b).map_err(|_| Error::Overflow)
}

pub(crate) fn is_zero_surd(s: &Surd) -> bool {
    s.a.is_zero() && s.b.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> QuadraticIrrational {
        QuadraticIrrational::new(3, 5, 2).unwrap()
    }

    #[test]
    fn quadrant_membership() {
        let c = LatticeCone::rational((0, 1), true, (1, 0), true).unwrap();
        assert!(c.contains(IVec2::new(2, 3)));
        assert!(c.contains(IVec2::new(0, 5)));
        assert!(!c.contains(IVec2::new(-1, 5)));
        let c = LatticeCone::rational((0, 1), false, (1, 0), true).unwrap();
        assert!(!c.contains(IVec2::new(0, 5)));
        assert_eq!(cone_contains(&c, IVec2::ZERO), Err(Error::ZeroVector));
    }

    #[test]
    fn quadratic_side_test_matches_rational_bracketing() {
        // Right ray through (z, 1), z = (3 + sqrt 5)/2 ~ 2.618; left ray (0, 1).
        let c = LatticeCone::new(RayBound::lattice(0, 1, true).unwrap(), RayBound::quadratic(golden(), true)).unwrap();
        assert!(c.contains(IVec2::new(1, 2)));
        assert!(c.contains(IVec2::new(13, 5)));
        assert!(!c.contains(IVec2::new(21, 8)));
        assert!(c.contains(IVec2::new(34, 13)));
        assert!(!c.contains(IVec2::new(55, 21)));
        assert!(!c.contains(IVec2::new(3, 1)));
    }

    #[test]
    fn cross_field_comparison() {
        let r2 = QuadraticIrrational::new(0, 2, 1).unwrap();
        let r3 = QuadraticIrrational::new(0, 3, 1).unwrap();
        assert_eq!(compare_quadratic(&r2, &r3), Ordering::Less);
        assert_eq!(compare_quadratic(&r3, &r2), Ordering::Greater);
        let a = QuadraticIrrational::new(0, 8, 2).unwrap();
        assert_eq!(compare_quadratic(&a, &r2), Ordering::Equal);
        let g = golden();
        let neg = QuadraticIrrational::new(-2, 3, 1).unwrap();
        assert_eq!(compare_quadratic(&neg, &g), Ordering::Less);
        assert_eq!(compare_quadratic(&g, &neg), Ordering::Greater);
    }

    #[test]
    fn cone_validation() {
        assert!(LatticeCone::rational((1, 0), true, (0, 1), true).is_err());
        assert!(LatticeCone::rational((1, 0), true, (1, 0), true).is_err());
        let h = LatticeCone::rational((1, 0), true, (-1, 0), true).unwrap();
        assert!(h.is_degenerate());
        assert!(h.contains(IVec2::new(3, -1)));
        assert!(!h.contains(IVec2::new(3, 1)));
    }
}
