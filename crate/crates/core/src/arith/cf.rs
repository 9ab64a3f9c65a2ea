use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{div_floor, gcd, Rational};
use crate::{Error, Result};

/// Coefficients `a_0, ..., a_n` of a minus-sign continued fraction
/// `a_0 - 1/(a_1 - 1/(... - 1/a_n))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NegCF {
    coeffs: Vec<BigInt>,
}

impl NegCF {
    /// Builds an expansion, checking that it is non-empty and that every
    /// coefficient after the first is at least 2.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::OutOfRange("empty continued fraction".into()));
        }
        let two = BigInt::from(2);
        if coeffs[1..].iter().any(|a| *a < two) {
            return Err(Error::OutOfRange("coefficient below 2 after the first".into()));
        }
        Ok(NegCF { coeffs })
    }

    /// Builds an expansion from machine integers.
    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&a| BigInt::from(a)).collect())
    }

    /// Builds an expansion without validating the coefficients.
    pub fn new_unchecked(coeffs: Vec<BigInt>) -> Self {
        NegCF { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Product of `a_i - 1` over all coefficients.
    pub fn product_minus_one(&self) -> BigInt {
        self.coeffs.iter().map(|a| a - 1).product()
    }
}

impl fmt::Display for NegCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// Expands `p/q` (coprime, `0 < q < p`) greedily with `a = ceil(p/q)` and
/// `(p, q) <- (q, a q - p)`.
pub fn neg_cf_expand(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<NegCF> {
    let (mut p, mut q) = (p.into(), q.into());
    if !q.is_positive() || q >= p {
        return Err(Error::OutOfRange("expected 0 < q < p".into()));
    }
    if !gcd(&p, &q).is_one() {
        return Err(Error::NotCoprime);
    }
    let mut coeffs = Vec::new();
    while !q.is_zero() {
        let a = -div_floor(&-&p, &q);
        let next = &a * &q - &p;
        coeffs.push(a);
        p = q;
        q = next;
    }
    Ok(NegCF { coeffs })
}

/// Evaluates an expansion from the right: `x <- a_i - 1/x`.
pub fn neg_cf_eval(cf: &NegCF) -> Result<Rational> {
    let mut iter = cf.coeffs.iter().rev();
    let last = iter
        .next()
        .ok_or_else(|| Error::OutOfRange("empty continued fraction".into()))?;
    let mut x = Rational::from_integer(last.clone());
    for a in iter {
        if x.is_zero() {
            return Err(Error::DivisionByZeroTail);
        }
        x = Rational::from_integer(a.clone()) - x.recip();
    }
    Ok(x)
}

/// Continuants `p_0 = 1, p_1 = a_0, p_{i+1} = a_i p_i - p_{i-1}`, returned as
/// `p_0, ..., p_{n+1}`.
pub fn continuants(cf: &NegCF) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(cf.len() + 1);
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    out.push(cur.clone());
    for a in &cf.coeffs {
        let next = a * &cur - &prev;
        prev = core::mem::replace(&mut cur, next);
        out.push(cur.clone());
    }
    out
}
