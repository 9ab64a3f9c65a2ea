//! Exact integer, rational and quadratic-irrational arithmetic.

mod cf;
mod sl2;
mod smith;
mod surd;

pub use cf::{continuants, neg_cf_eval, neg_cf_expand, NegCF};
pub use sl2::{classify_sl2, primitive_root, Sl2Class, Sl2Kind, Sl2Mat};
pub use smith::{chain_relations, smith_normal_form, smith_presentation, SmithForm, SmithPresentation};
pub use surd::{periodic_surd, quadratic_neg_cf, PeriodicNegCF, QuadraticIrrational, Surd};

pub use num_bigint::BigInt;

/// Reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Floor of `n / d` for `d != 0`.
pub(crate) fn div_floor(n: &BigInt, d: &BigInt) -> BigInt {
    n.div_floor(d)
}

/// Floor of a rational number.
pub(crate) fn rat_floor(r: &Rational) -> BigInt {
    div_floor(r.numer(), r.denom())
}

/// Ceiling of a rational number.
pub(crate) fn rat_ceil(r: &Rational) -> BigInt {
    -div_floor(&-r.numer(), r.denom())
}

/// Greatest common divisor of two absolute values.
pub(crate) fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.abs().gcd(&b.abs())
}

/// True when `n` is the square of an integer.
pub(crate) fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    if n.is_zero() {
        return true;
    }
    let r = num_integer::Roots::sqrt(n);
    &r * &r == *n
}

/// Integer square root (floor) of a non-negative integer.
pub(crate) fn isqrt(n: &BigInt) -> BigInt {
    num_integer::Roots::sqrt(n)
}
