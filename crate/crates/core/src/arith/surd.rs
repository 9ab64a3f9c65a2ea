use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{div_floor, is_square, isqrt, rat_ceil, rat_floor, Rational};
use crate::{Error, Result};

/// Element `a + b sqrt(d)` of a real quadratic field, with rational `a`, `b`.
///
/// When `b` is zero the value is rational and `d` is irrelevant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    pub a: Rational,
    pub b: Rational,
    pub d: BigInt,
}

impl Surd {
    pub fn rational(a: Rational) -> Self {
        Surd { a, b: Rational::zero(), d: BigInt::one() }
    }

    pub fn integer(a: impl Into<BigInt>) -> Self {
        Self::rational(Rational::from_integer(a.into()))
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Rewrites `self` over `sqrt(d)`, possible when `d * self.d` is a square.
    pub fn rebase(&self, d: &BigInt) -> Option<Surd> {
        if self.b.is_zero() || self.d == *d {
            return Some(Surd { a: self.a.clone(), b: self.b.clone(), d: d.clone() });
        }
        let prod = &self.d * d;
        let s = isqrt(&prod);
        if &s * &s != prod {
            return None;
        }
        Some(Surd { a: self.a.clone(), b: &self.b * Rational::new(s, d.clone()), d: d.clone() })
    }

    fn align(&self, o: &Surd) -> (Surd, Surd) {
        if o.b.is_zero() || self.d == o.d {
            let d = if self.b.is_zero() { o.d.clone() } else { self.d.clone() };
            return (Surd { d: d.clone(), ..self.clone() }, Surd { d, ..o.clone() });
        }
        if self.b.is_zero() {
            return (Surd { d: o.d.clone(), ..self.clone() }, o.clone());
        }
        let o2 = o.rebase(&self.d).expect("surds from different quadratic fields");
        (self.clone(), o2)
    }

    pub fn add(&self, o: &Surd) -> Surd {
        let (x, y) = self.align(o);
        Surd { a: &x.a + &y.a, b: &x.b + &y.b, d: x.d }
    }

    pub fn sub(&self, o: &Surd) -> Surd {
        let (x, y) = self.align(o);
        Surd { a: &x.a - &y.a, b: &x.b - &y.b, d: x.d }
    }

    pub fn neg(&self) -> Surd {
        Surd { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }

    pub fn mul(&self, o: &Surd) -> Surd {
        let (x, y) = self.align(o);
        let dd = Rational::from_integer(x.d.clone());
        Surd { a: &x.a * &y.a + &x.b * &y.b * dd, b: &x.a * &y.b + &x.b * &y.a, d: x.d }
    }

    pub fn scale(&self, k: &Rational) -> Surd {
        Surd { a: &self.a * k, b: &self.b * k, d: self.d.clone() }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Surd> {
        let norm = &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone());
        if norm.is_zero() {
            return None;
        }
        Some(Surd { a: &self.a / &norm, b: -&self.b / &norm, d: self.d.clone() })
    }

    pub fn div(&self, o: &Surd) -> Option<Surd> {
        o.recip().map(|r| self.mul(&r))
    }

    /// Exact sign, decided by comparing `a^2` with `b^2 d`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn cmp_to(&self, o: &Surd) -> Ordering {
        self.sub(o).signum()
    }

    /// Exact floor. For an irrational value `(A + B sqrt d)/C` with `C > 0`
    /// the floor equals `floor((A + floor(B sqrt d))/C)`.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return rat_floor(&self.a);
        }
        let c = self.a.denom().lcm(self.b.denom());
        let big_a = self.a.numer() * (&c / self.a.denom());
        let big_b = self.b.numer() * (&c / self.b.denom());
        let r = isqrt(&(&big_b * &big_b * &self.d));
        let fb = if big_b.is_negative() { -r - 1 } else { r };
        div_floor(&(big_a + fb), &c)
    }

    /// Exact ceiling.
    pub fn ceil(&self) -> BigInt {
        if self.b.is_zero() {
            rat_ceil(&self.a)
        } else {
            self.floor() + 1
        }
    }
}

/// The real number `(P + sqrt D)/Q` in canonical form: `D > 0` not a square,
/// `Q != 0` and `Q | D - P^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticIrrational {
    p: BigInt,
    d: BigInt,
    q: BigInt,
}

impl QuadraticIrrational {
    /// Builds `(P + sqrt D)/Q`, rescaling to canonical form when `Q` does not
    /// divide `D - P^2`.
    pub fn new(p: impl Into<BigInt>, d: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, d, q) = (p.into(), d.into(), q.into());
        if !d.is_positive() || is_square(&d) {
            return Err(Error::InvalidSurd(format!("D = {d} must be a positive non-square")));
        }
        if q.is_zero() {
            return Err(Error::InvalidSurd("Q = 0".into()));
        }
        if (&d - &p * &p).is_multiple_of(&q) {
            return Ok(QuadraticIrrational { p, d, q });
        }
        let qa = q.abs();
        Ok(QuadraticIrrational { p: &p * &qa, d: &d * &q * &q, q: &q * &qa })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn to_surd(&self) -> Surd {
        Surd {
            a: Rational::new(self.p.clone(), self.q.clone()),
            b: Rational::new(BigInt::one(), self.q.clone()),
            d: self.d.clone(),
        }
    }

    /// Builds the canonical form of an irrational field element.
    pub fn from_surd(s: &Surd) -> Result<Self> {
        if s.b.is_zero() {
            return Err(Error::InvalidSurd("value is rational".into()));
        }
        let c = s.a.denom().lcm(s.b.denom());
        let big_a = s.a.numer() * (&c / s.a.denom());
        let big_b = s.b.numer() * (&c / s.b.denom());
        // (A + B sqrt d)/c = (A sgn(B) + sqrt(B^2 d)) / (c sgn(B))
        let sg = if big_b.is_negative() { -BigInt::one() } else { BigInt::one() };
        Self::new(&big_a * &sg, &big_b * &big_b * &s.d, &c * &sg)
    }

    pub fn floor(&self) -> BigInt {
        self.to_surd().floor()
    }

    pub fn ceil(&self) -> BigInt {
        self.to_surd().ceil()
    }

    /// Exact sign of `x - y z` for integers `x`, `y`.
    pub fn sign_of_affine(&self, x: &BigInt, y: &BigInt) -> Ordering {
        Surd::rational(Rational::from_integer(x.clone()))
            .sub(&self.to_surd().scale(&Rational::from_integer(y.clone())))
            .signum()
    }

    /// `1/(a - z)` in canonical form, the one-step tail map.
    fn tail(&self, a: &BigInt) -> Self {
        let p2 = a * &self.q - &self.p;
        let q2 = (&p2 * &p2 - &self.d) / &self.q;
        QuadraticIrrational { p: p2, d: self.d.clone(), q: q2 }
    }
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + sqrt({}))/{}", self.p, self.d, self.q)
    }
}

/// Eventually periodic minus-sign continued fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicNegCF {
    pub preperiod: Vec<BigInt>,
    /// Minimal repeating block.
    pub period: Vec<BigInt>,
    /// Tail value at the start of the period.
    pub reduced: QuadraticIrrational,
}

/// Expands `z` with `a = ceil(z)` and `z <- 1/(a - z)`, detecting the period
/// by the first repetition of the canonical `(P, Q)` state.
pub fn quadratic_neg_cf(z: &QuadraticIrrational) -> PeriodicNegCF {
    let mut seen: BTreeMap<(BigInt, BigInt), usize> = BTreeMap::new();
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut states: Vec<QuadraticIrrational> = Vec::new();
    let mut cur = z.clone();
    loop {
        let key = (cur.p.clone(), cur.q.clone());
        if let Some(&start) = seen.get(&key) {
            let period = coeffs.split_off(start);
            return PeriodicNegCF { preperiod: coeffs, period, reduced: states.swap_remove(start) };
        }
        seen.insert(key, coeffs.len());
        let a = cur.ceil();
        let next = cur.tail(&a);
        coeffs.push(a);
        states.push(cur);
        cur = next;
    }
}

/// The purely periodic number whose expansion repeats `period` forever.
pub fn periodic_surd(period: &[BigInt]) -> Result<QuadraticIrrational> {
    if period.is_empty() || period.iter().any(|a| *a < BigInt::from(2)) {
        return Err(Error::OutOfRange("period entries must be at least 2".into()));
    }
    if period.iter().all(|a| *a == BigInt::from(2)) {
        return Err(Error::OutOfRange("an all-2 period has a rational limit".into()));
    }
    // w = M(w) with M = prod [[a, -1], [1, 0]].
    let (mut al, mut be, mut ga, mut de) = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    for a in period {
        let (na, nb) = (&al * a + &be, -&al);
        let (nc, nd) = (&ga * a + &de, -&ga);
        al = na;
        be = nb;
        ga = nc;
        de = nd;
    }
    // ga w^2 + (de - al) w - be = 0; the root above 1 is the attractor.
    let disc = (&al - &de) * (&al - &de) + BigInt::from(4) * &be * &ga;
    let two_g = BigInt::from(2) * &ga;
    let plus = QuadraticIrrational::new(&al - &de, disc.clone(), two_g.clone())?;
    if plus.to_surd().cmp_to(&Surd::integer(1)) == Ordering::Greater {
        Ok(plus)
    } else {
        QuadraticIrrational::new(&de - &al, disc, -two_g)
    }
}
