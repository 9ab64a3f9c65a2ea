use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::{Error, Result};

/// Integer vector of the plane lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IVec2 {
    pub x: i64,
    pub y: i64,
}

impl IVec2 {
    pub const ZERO: IVec2 = IVec2 { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        IVec2 { x, y }
    }

    /// Builds a vector from wide coordinates, failing on overflow.
    pub fn from_wide(x: i128, y: i128) -> Result<Self> {
        Ok(IVec2 {
            x: i64::try_from(x).map_err(|_| Error::Overflow)?,
            y: i64::try_from(y).map_err(|_| Error::Overflow)?,
        })
    }

    /// Intersection form `x y' - y x'`.
    pub fn wedge(self, o: IVec2) -> i128 {
        self.x as i128 * o.y as i128 - self.y as i128 * o.x as i128
    }

    pub fn dot(self, o: IVec2) -> i128 {
        self.x as i128 * o.x as i128 + self.y as i128 * o.y as i128
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn is_primitive(self) -> bool {
        !self.is_zero() && gcd(self.x.unsigned_abs(), self.y.unsigned_abs()) == 1
    }

    /// Largest coordinate magnitude.
    pub fn norm_inf(self) -> u64 {
        self.x.unsigned_abs().max(self.y.unsigned_abs())
    }

    pub fn checked_add(self, o: IVec2) -> Result<IVec2> {
        Self::from_wide(self.x as i128 + o.x as i128, self.y as i128 + o.y as i128)
    }

    pub fn checked_sub(self, o: IVec2) -> Result<IVec2> {
        Self::from_wide(self.x as i128 - o.x as i128, self.y as i128 - o.y as i128)
    }

    /// `self + k o`, failing on overflow.
    pub fn checked_axpy(self, k: i128, o: IVec2) -> Result<IVec2> {
        let x = k.checked_mul(o.x as i128).and_then(|v| v.checked_add(self.x as i128));
        let y = k.checked_mul(o.y as i128).and_then(|v| v.checked_add(self.y as i128));
        match (x, y) {
            (Some(x), Some(y)) => Self::from_wide(x, y),
            _ => Err(Error::Overflow),
        }
    }

    pub fn big(self) -> (BigInt, BigInt) {
        (BigInt::from(self.x), BigInt::from(self.y))
    }
}

impl Add for IVec2 {
    type Output = IVec2;
    fn add(self, o: IVec2) -> IVec2 {
        IVec2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for IVec2 {
    type Output = IVec2;
    fn sub(self, o: IVec2) -> IVec2 {
        IVec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for IVec2 {
    type Output = IVec2;
    fn neg(self) -> IVec2 {
        IVec2::new(-self.x, -self.y)
    }
}

impl Mul<IVec2> for i64 {
    type Output = IVec2;
    fn mul(self, v: IVec2) -> IVec2 {
        IVec2::new(self * v.x, self * v.y)
    }
}

impl fmt::Display for IVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<PrimVec> for IVec2 {
    fn from(p: PrimVec) -> IVec2 {
        p.0
    }
}

/// Non-zero integer vector with coprime coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimVec(IVec2);

impl PrimVec {
    pub fn new(x: i64, y: i64) -> Result<Self> {
        Self::try_from_vec(IVec2::new(x, y))
    }

    pub fn try_from_vec(v: IVec2) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !v.is_primitive() {
            return Err(Error::NotPrimitive(v.x, v.y));
        }
        Ok(PrimVec(v))
    }

    pub fn x(self) -> i64 {
        self.0.x
    }

    pub fn y(self) -> i64 {
        self.0.y
    }

    pub fn vec(self) -> IVec2 {
        self.0
    }

    pub fn wedge(self, o: PrimVec) -> i128 {
        self.0.wedge(o.0)
    }

    pub fn neg(self) -> PrimVec {
        PrimVec(-self.0)
    }
}

impl fmt::Display for PrimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Returns `(s, t)` with `a s + b t = gcd(a, b) = 1` for coprime `a`, `b`.
pub(crate) fn bezout(a: i64, b: i64) -> (i128, i128) {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_s, -old_t)
    } else {
        (old_s, old_t)
    }
}

/// A vector `w` with `p ^ w = target` for primitive `p`, target being +-1.
pub(crate) fn wedge_partner(p: IVec2, target: i128) -> Result<IVec2> {
    // p.x s + p.y t = 1, so p ^ (-t, s) = p.x s + p.y t = 1.
    let (s, t) = bezout(p.x, p.y);
    IVec2::from_wide(-t * target, s * target)
}
