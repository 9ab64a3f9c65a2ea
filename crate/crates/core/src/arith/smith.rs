use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Smith normal form `U R V = D` of an integer matrix `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Diagonal of `D`, each entry dividing the next, all non-negative.
    pub diagonal: Vec<BigInt>,
    /// Unimodular row transform (rows x rows).
    pub u: Vec<Vec<BigInt>>,
    /// Unimodular column transform (cols x cols).
    pub v: Vec<Vec<BigInt>>,
}

/// Abelian group presented by generators (columns) and relations (rows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithPresentation {
    /// Orders of the cyclic factors other than 1; 0 marks a free factor.
    pub invariant_factors: Vec<BigInt>,
    /// Row `i` expresses generator `i` in the cyclic factors, each entry
    /// reduced modulo the factor's order when that order is positive.
    pub generator_images: Vec<Vec<BigInt>>,
    /// Group order, `None` when infinite.
    pub order: Option<BigInt>,
}

impl SmithPresentation {
    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Computes the Smith normal form of `r` (rows of equal length).
pub fn smith_normal_form(r: &[Vec<BigInt>]) -> SmithForm {
    let m = r.len();
    let n = r.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = r.to_vec();
    let mut u = identity(m);
    let mut v = identity(n);

    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in 0..n {
                    let s = &q * &a[t][j];
                    a[i][j] -= s;
                }
                for j in 0..m {
                    let s = &q * &u[t][j];
                    u[i][j] -= s;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in 0..m {
                    let s = &q * &a[i][t];
                    a[i][j] -= s;
                }
                for i in 0..n {
                    let s = &q * &v[i][t];
                    v[i][j] -= s;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in 0..n {
                        let s = a[i][j].clone();
                        a[t][j] += s;
                    }
                    for j in 0..m {
                        let s = u[i][j].clone();
                        u[t][j] += s;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    let diagonal = (0..m.min(n)).map(|t| a[t][t].clone()).collect();
    SmithForm { diagonal, u, v }
}

/// Presents the group with generators `mu_0, ..., mu_{n-1}` (columns) and the
/// given relations (rows) as a product of cyclic factors.
pub fn smith_presentation(relations: &[Vec<BigInt>]) -> SmithPresentation {
    let n = relations.first().map_or(0, Vec::len);
    let snf = smith_normal_form(relations);
    // With mu = V nu the relations become d_j nu_j = 0.
    let factor = |j: usize| snf.diagonal.get(j).cloned().unwrap_or_else(BigInt::zero);
    let kept: Vec<usize> = (0..n).filter(|&j| !factor(j).is_one()).collect();
    let invariant_factors: Vec<BigInt> = kept.iter().map(|&j| factor(j)).collect();
    let generator_images = (0..n)
        .map(|i| {
            kept.iter()
                .map(|&j| {
                    let d = factor(j);
                    if d.is_zero() {
                        snf.v[i][j].clone()
                    } else {
                        snf.v[i][j].mod_floor(&d)
                    }
                })
                .collect()
        })
        .collect();
    let order = if invariant_factors.iter().any(Zero::is_zero) {
        None
    } else {
        Some(invariant_factors.iter().product())
    };
    SmithPresentation { invariant_factors, generator_images, order }
}

/// Tridiagonal relation matrix `a_i mu_i - mu_{i-1} - mu_{i+1} = 0`.
pub fn chain_relations(weights: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = weights.len();
    let mut r = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        r[i][i] = weights[i].clone();
        if i > 0 {
            r[i][i - 1] = -BigInt::one();
        }
        if i + 1 < n {
            r[i][i + 1] = -BigInt::one();
        }
    }
    r
}
