use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{classify_sl2, QuadraticIrrational, Sl2Class, Sl2Kind, Sl2Mat};
use crate::Result;

/// Which branch of the torus-bundle table produced the count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NCase {
    /// Trace below -2: `prod (a_i - 1)` over the period, to the power `k`.
    HyperbolicNegativeTrace,
    /// Trace above 2: the same product minus 2.
    HyperbolicPositiveTrace,
    /// Conjugate to `[[1, 0], [k, 1]]` with `k < 0`: `|k| - 1`.
    ParabolicNegative,
    /// Conjugate to `[[1, 0], [k, 1]]` with `k > 0` odd: none.
    ParabolicPositiveOdd,
    /// Conjugate to `[[1, 0], [k, 1]]` with `k > 0` even: at most 2.
    ParabolicPositiveEven,
    /// Trace -2, not `-I`: left open.
    ParabolicNegativeTrace,
    /// The identity or `-I`: none.
    PlusMinusIdentity,
    /// Finite order, not conjugate to `[[-k, -1], [1, 0]]` for `k` in `{0, 1}`: none.
    FiniteOrderGeneric,
    /// Finite order, conjugate to `[[-k, -1], [1, 0]]` for `k` in `{0, 1}`: at most 2.
    FiniteOrderExceptional,
}

/// Number of virtually overtwisted oriented structures up to isotopy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NValue {
    Exact(BigInt),
    /// Only bounds are known.
    Interval { lo: BigInt, hi: BigInt },
}

impl NValue {
    pub fn is_exact(&self) -> bool {
        matches!(self, NValue::Exact(_))
    }

    pub fn exact(&self) -> Option<&BigInt> {
        match self {
            NValue::Exact(n) => Some(n),
            NValue::Interval { .. } => None,
        }
    }
}

/// The universally tight family of a torus bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniversallyTight {
    /// Infinitely many classes, one set for each 2π-torsion value `n >= 0`.
    pub infinite_family: bool,
    /// Each class is determined by its 2π-torsion.
    pub unique_per_torsion: bool,
}

/// Image in the projective line of the asymptotic direction map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaImage {
    /// The whole projective line.
    Full,
    /// The projective line minus the invariant line of `A`, spanned by `fixed`.
    MinusFixedPoint { fixed: (BigInt, BigInt) },
    /// The interval from the stable direction (left end) to the unstable one
    /// (right end), given by slopes `x/y`.
    Interval { stable: QuadraticIrrational, unstable: QuadraticIrrational },
    /// Not determined for this conjugacy class.
    Unspecified,
}

/// Census of tight structures on the torus bundle with monodromy `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleReport {
    pub classification: Sl2Class,
    pub case: NCase,
    pub n: NValue,
    pub universally_tight: UniversallyTight,
    pub delta: DeltaImage,
}

/// Applies the torus-bundle classification to `A`.
pub fn bundle_census(a: &Sl2Mat) -> Result<BundleReport> {
    let class = classify_sl2(a)?;
    let t = class.trace.clone();
    let two = BigInt::from(2);
    let at_most_two = || NValue::Interval { lo: BigInt::zero(), hi: two.clone() };
    let (case, n, delta) = match class.kind {
        Sl2Kind::Hyperbolic => {
            let h = class.hyperbolic.as_ref().expect("hyperbolic data");
            let prod = h.period().iter().fold(BigInt::one(), |acc, ai| acc * (ai - 1));
            let total = num_traits::pow(prod, h.period_repetitions as usize);
            let delta = DeltaImage::Interval { stable: h.stable_slope.clone(), unstable: h.unstable_slope.clone() };
            if t.is_negative() {
                (NCase::HyperbolicNegativeTrace, NValue::Exact(total), delta)
            } else {
                (NCase::HyperbolicPositiveTrace, NValue::Exact(total - 2), delta)
            }
        }
        Sl2Kind::Parabolic => {
            let p = class.parabolic.as_ref().expect("parabolic data");
            if p.eps < 0 {
                (NCase::ParabolicNegativeTrace, at_most_two(), DeltaImage::Unspecified)
            } else if p.k.is_negative() {
                (
                    NCase::ParabolicNegative,
                    NValue::Exact(p.k.abs() - 1),
                    DeltaImage::MinusFixedPoint { fixed: p.fixed.clone() },
                )
            } else if (&p.k % 2u8).is_zero() {
                (NCase::ParabolicPositiveEven, at_most_two(), DeltaImage::Full)
            } else {
                (NCase::ParabolicPositiveOdd, NValue::Exact(BigInt::zero()), DeltaImage::Full)
            }
        }
        Sl2Kind::FiniteOrder => {
            let f = class.finite.as_ref().expect("finite-order data");
            if f.j_form.is_none() {
                (NCase::PlusMinusIdentity, NValue::Exact(BigInt::zero()), DeltaImage::Full)
            } else if f.rotation_form.is_some() {
                (NCase::FiniteOrderExceptional, at_most_two(), DeltaImage::Full)
            } else {
                (NCase::FiniteOrderGeneric, NValue::Exact(BigInt::zero()), DeltaImage::Full)
            }
        }
    };
    let universally_tight = UniversallyTight { infinite_family: true, unique_per_torsion: t != BigInt::from(-2) };
    Ok(BundleReport { classification: class, case, n, universally_tight, delta })
}
