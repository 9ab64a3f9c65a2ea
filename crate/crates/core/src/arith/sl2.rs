use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::surd::{quadratic_neg_cf, PeriodicNegCF, QuadraticIrrational};
use super::gcd;
use crate::{Error, Result};

/// Integer 2x2 matrix of determinant 1, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sl2Mat {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Sl2Mat {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Sl2Mat { a: a.into(), b: b.into(), c: c.into(), d: d.into() };
        let det = &m.a * &m.d - &m.b * &m.c;
        if !det.is_one() {
            return Err(Error::NotInSl2(format!("{det}")));
        }
        Ok(m)
    }

    /// Builds a matrix that is known to have determinant 1.
    pub(crate) fn raw(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        Sl2Mat { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::raw(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// The step matrix `[[a, -1], [1, 0]]` of the map `z -> a - 1/z`.
    pub fn step(a: &BigInt) -> Self {
        Self::raw(a.clone(), -BigInt::one(), BigInt::one(), BigInt::zero())
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn mul(&self, o: &Sl2Mat) -> Sl2Mat {
        Self::raw(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    pub fn inverse(&self) -> Sl2Mat {
        Self::raw(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn neg(&self) -> Sl2Mat {
        Self::raw(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    pub fn pow(&self, n: u64) -> Sl2Mat {
        let mut result = Self::identity();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// `self * o * self^-1`.
    pub fn conjugate(&self, o: &Sl2Mat) -> Sl2Mat {
        self.mul(o).mul(&self.inverse())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_neg_identity(&self) -> bool {
        *self == Self::identity().neg()
    }

    /// Image of the column vector `(x, y)`.
    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }
}

impl fmt::Display for Sl2Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Dynamical type of an `SL2(Z)` matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sl2Kind {
    FiniteOrder,
    Parabolic,
    Hyperbolic,
}

/// Normal form data of a finite-order matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOrderData {
    /// Multiplicative order: 1, 2, 3, 4 or 6.
    pub order: u8,
    /// `(eps, k)` with the matrix conjugate to `eps [[k, 1], [-1, 0]]`, or
    /// `None` for `+-I`.
    pub j_form: Option<(i8, i8)>,
    /// `k` with the matrix conjugate to `[[-k, -1], [1, 0]]`, `k in {0, 1}`,
    /// when such a `k` exists.
    pub rotation_form: Option<u8>,
}

/// Normal form data of a parabolic matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicData {
    /// Sign `eps` with the matrix conjugate to `eps [[1, 0], [k, 1]]`.
    pub eps: i8,
    pub k: BigInt,
    /// Primitive vector spanning the invariant line.
    pub fixed: (BigInt, BigInt),
}

/// Axis and root data of a hyperbolic matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicData {
    /// Primitive matrix `P` with `P^power = A`.
    pub primitive: Sl2Mat,
    pub power: u64,
    /// Slope `x/y` of the eigendirection whose eigenvalue exceeds 1 in
    /// absolute value.
    pub unstable_slope: QuadraticIrrational,
    pub stable_slope: QuadraticIrrational,
    /// Expansion of the unstable slope.
    pub expansion: PeriodicNegCF,
    /// Number of minimal periods traversed by `A` along its axis.
    pub period_repetitions: u64,
}

impl HyperbolicData {
    /// Minimal period of the unstable slope's expansion.
    pub fn period(&self) -> &[BigInt] {
        &self.expansion.period
    }

    /// The period word of the primitive root: the minimal period repeated
    /// `period_repetitions / power` times.
    pub fn primitive_word(&self) -> Vec<BigInt> {
        let reps = (self.period_repetitions / self.power) as usize;
        let mut w = Vec::with_capacity(reps * self.expansion.period.len());
        for _ in 0..reps {
            w.extend(self.expansion.period.iter().cloned());
        }
        w
    }
}

/// Classification record of an `SL2(Z)` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Class {
    pub matrix: Sl2Mat,
    pub kind: Sl2Kind,
    pub trace: BigInt,
    pub finite: Option<FiniteOrderData>,
    pub parabolic: Option<ParabolicData>,
    pub hyperbolic: Option<HyperbolicData>,
}

/// Classifies `A` by its trace and computes its conjugacy normal-form data.
pub fn classify_sl2(m: &Sl2Mat) -> Result<Sl2Class> {
    let det = &m.a * &m.d - &m.b * &m.c;
    if !det.is_one() {
        return Err(Error::NotInSl2(format!("{det}")));
    }
    let t = m.trace();
    let two = BigInt::from(2);
    let mut class = Sl2Class {
        matrix: m.clone(),
        kind: Sl2Kind::FiniteOrder,
        trace: t.clone(),
        finite: None,
        parabolic: None,
        hyperbolic: None,
    };
    if t.abs() > two {
        class.kind = Sl2Kind::Hyperbolic;
        class.hyperbolic = Some(hyperbolic_data(m)?);
    } else if t.abs() == two && !m.is_identity() && !m.is_neg_identity() {
        class.kind = Sl2Kind::Parabolic;
        class.parabolic = Some(parabolic_data(m));
    } else {
        class.finite = Some(finite_data(m));
    }
    Ok(class)
}

/// Returns `(P, k)` with `P` primitive and `P^k = A`, `k` maximal.
pub fn primitive_root(m: &Sl2Mat) -> Result<(Sl2Mat, u64)> {
    let class = classify_sl2(m)?;
    match class.hyperbolic {
        Some(h) => Ok((h.primitive, h.power)),
        None => Err(Error::NotHyperbolic),
    }
}

fn finite_data(m: &Sl2Mat) -> FiniteOrderData {
    if m.is_identity() {
        return FiniteOrderData { order: 1, j_form: None, rotation_form: None };
    }
    if m.is_neg_identity() {
        return FiniteOrderData { order: 2, j_form: None, rotation_form: None };
    }
    // The binary form v ^ Av = c x^2 + (d - a) x y - b y^2 is definite with the
    // sign of c, and its proper equivalence class fixes the conjugacy class.
    let t = i8::try_from(&m.trace()).expect("finite-order trace lies in [-1, 1]");
    let eps: i8 = if m.c.is_positive() { -1 } else { 1 };
    let order = match t {
        0 => 4,
        1 => 6,
        _ => 3,
    };
    let k = eps * t;
    let rotation_form = match (eps, k) {
        (-1, 0) => Some(0),
        (-1, 1) => Some(1),
        _ => None,
    };
    FiniteOrderData { order, j_form: Some((eps, k)), rotation_form }
}

fn parabolic_data(m: &Sl2Mat) -> ParabolicData {
    let eps: i8 = if m.trace().is_positive() { 1 } else { -1 };
    let e = BigInt::from(eps);
    // N = eps A - I has rank one: N = k [[vx vy, -vx^2], [vy^2, -vx vy]].
    let n11: BigInt = &e * &m.a - 1;
    let n12 = &e * &m.b;
    let n21 = &e * &m.c;
    let n22: BigInt = &e * &m.d - 1;
    let (cx, cy) = if !n11.is_zero() || !n21.is_zero() { (n11, n21.clone()) } else { (n12.clone(), n22) };
    let g = gcd(&cx, &cy);
    let (vx, vy) = (&cx / &g, &cy / &g);
    let k = if !vy.is_zero() { &n21 / (&vy * &vy) } else { -(&n12 / (&vx * &vx)) };
    ParabolicData { eps, k, fixed: (vx, vy) }
}

fn hyperbolic_data(m: &Sl2Mat) -> Result<HyperbolicData> {
    let t = m.trace();
    let disc: BigInt = &t * &t - 4;
    // Eigenvalue lambda = (t + s sqrt(disc))/2 with s = sign(t); its eigenvector
    // has slope (lambda - d)/c = ((a - d) + s sqrt(disc)) / (2c).
    let amd = &m.a - &m.d;
    let two_c = BigInt::from(2) * &m.c;
    let (unstable, stable) = if t.is_positive() {
        (
            QuadraticIrrational::new(amd.clone(), disc.clone(), two_c.clone())?,
            QuadraticIrrational::new(-&amd, disc.clone(), -&two_c)?,
        )
    } else {
        (
            QuadraticIrrational::new(-&amd, disc.clone(), -&two_c)?,
            QuadraticIrrational::new(amd.clone(), disc.clone(), two_c.clone())?,
        )
    };
    let expansion = quadratic_neg_cf(&unstable);

    // Generator of the slope's stabilizer: conjugate the period product by the
    // preperiod product.
    let pre = expansion.preperiod.iter().fold(Sl2Mat::identity(), |acc, a| acc.mul(&Sl2Mat::step(a)));
    let per = expansion.period.iter().fold(Sl2Mat::identity(), |acc, a| acc.mul(&Sl2Mat::step(a)));
    let gen = pre.conjugate(&per);
    let gen_inv = gen.inverse();
    let target = t.abs();

    let mut power = gen.clone();
    let mut power_inv = gen_inv.clone();
    let mut j: u64 = 1;
    loop {
        let found = [
            (power.clone(), 1i8, false),
            (power.neg(), -1, false),
            (power_inv.clone(), 1, true),
            (power_inv.neg(), -1, true),
        ]
        .into_iter()
        .find(|(cand, _, _)| cand == m);
        if let Some((_, sign, inverted)) = found {
            let base = if inverted { gen_inv.clone() } else { gen.clone() };
            let (primitive, k) = if sign == 1 || j % 2 == 1 {
                let b = if sign == 1 { base } else { base.neg() };
                (b, j)
            } else {
                let odd = j >> j.trailing_zeros();
                (base.pow(j / odd).neg(), odd)
            };
            return Ok(HyperbolicData {
                primitive,
                power: k,
                unstable_slope: unstable,
                stable_slope: stable,
                expansion,
                period_repetitions: j,
            });
        }
        if power.trace().abs() > target {
            return Err(Error::Unsupported(format!(
                "matrix {m} is not a power of its axis generator {gen}"
            )));
        }
        power = power.mul(&gen);
        power_inv = power_inv.mul(&gen_inv);
        j += 1;
    }
}
