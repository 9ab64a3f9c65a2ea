//! Disjoint arc families on the punctured disk and the annulus: closed-form
//! counts and explicit enumeration.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Largest number of marked points accepted for enumeration.
pub const MAX_ARC_POINTS: u32 = 12;

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// `C(2n, n)` families of disjoint arcs joining `2n` marked points on the
/// boundary of a once-punctured disk.
pub fn disk_count(n: u32) -> BigInt {
    binomial(2 * n as u64, n as u64)
}

/// `sum_{n=1}^{min(n0, n1)} 2n C(2n0, n0 - n) C(2n1, n1 - n)` families on the
/// annulus using at least one arc between the two boundary circles.
pub fn annulus_count(n0: u32, n1: u32) -> BigInt {
    let (n0, n1) = (n0 as u64, n1 as u64);
    (1..=n0.min(n1)).fold(BigInt::zero(), |acc, n| {
        acc + BigInt::from(2 * n) * binomial(2 * n0, n0 - n) * binomial(2 * n1, n1 - n)
    })
}

/// A surface with marked boundary points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcProblem {
    /// `2n` points on the boundary of a once-punctured disk.
    PuncturedDisk(u32),
    /// `2 n0` points on the inner circle and `2 n1` on the outer one.
    Annulus(u32, u32),
}

/// Endpoint of an arc: boundary circle index and position on it.
pub type Mark = (u8, u32);

/// One class of arc families.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matching {
    /// Arcs as ordered endpoint pairs.
    pub pairs: Vec<(Mark, Mark)>,
    /// Whether each arc joins the two boundary circles.
    pub crossing: Vec<bool>,
    /// For the disk, the index of the boundary gap facing the puncture.
    pub puncture_gap: Option<u32>,
}

impl Matching {
    /// For a disk family, the set of arc origins: the endpoint from which the
    /// puncture lies on the left when the arc is traversed.
    pub fn chosen_points(&self, n: u32) -> Option<BTreeSet<u32>> {
        let gap = self.puncture_gap?;
        let total = 2 * n;
        let mut out = BTreeSet::new();
        for &((_, i), (_, j)) in &self.pairs {
            // Gaps i..j-1 lie on the counterclockwise boundary segment from i to j.
            let inside = (gap + total - i) % total < (j + total - i) % total;
            out.insert(if inside { j } else { i });
        }
        Some(out)
    }
}

fn guard(points: u32) -> Result<()> {
    if points > MAX_ARC_POINTS {
        Err(Error::EnumerationGuard { size: points as usize, cap: MAX_ARC_POINTS as usize })
    } else {
        Ok(())
    }
}

/// All non-crossing perfect matchings of `0..2n` on a circle.
fn noncrossing(lo: u32, hi: u32) -> Vec<Vec<(u32, u32)>> {
    if lo >= hi {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut j = lo + 1;
    while j < hi {
        for inner in noncrossing(lo + 1, j) {
            for outer in noncrossing(j + 1, hi) {
                let mut m = alloc::vec![(lo, j)];
                m.extend(inner.iter().copied());
                m.extend(outer.iter().copied());
                out.push(m);
            }
        }
        j += 2;
    }
    out
}

/// Boundary gaps `g` (between points `g` and `g + 1`) grouped by the
/// complementary region of the arcs they face.
fn gap_classes(n2: u32, arcs: &[(u32, u32)]) -> Vec<u32> {
    // Two gaps face the same region when no arc separates them; an arc
    // (i, j), i < j, separates gaps inside i..j-1 from those outside.
    let mut reps = Vec::new();
    for g in 0..n2 {
        let sig: Vec<bool> = arcs.iter().map(|&(i, j)| g >= i && g < j).collect();
        let seen = (0..g).any(|h| arcs.iter().map(|&(i, j)| h >= i && h < j).collect::<Vec<_>>() == sig);
        if !seen {
            reps.push(g);
        }
    }
    reps
}

/// Enumerates arc families up to the equivalence fixing the boundary.
pub fn enumerate_matchings(problem: ArcProblem) -> Result<Vec<Matching>> {
    match problem {
        ArcProblem::PuncturedDisk(n) => {
            guard(2 * n)?;
            let n2 = 2 * n;
            let mut out = Vec::new();
            for m in noncrossing(0, n2) {
                // With no arcs the single region faces everything.
                let gaps = if n2 == 0 { alloc::vec![0] } else { gap_classes(n2, &m) };
                for g in gaps {
                    out.push(Matching {
                        pairs: m.iter().map(|&(i, j)| ((0, i), (0, j))).collect(),
                        crossing: alloc::vec![false; m.len()],
                        puncture_gap: Some(g),
                    });
                }
            }
            Ok(out)
        }
        ArcProblem::Annulus(n0, n1) => {
            guard(2 * (n0 + n1))?;
            Ok(annulus_matchings(2 * n0, 2 * n1))
        }
    }
}

/// Families on the annulus with at least one crossing arc. Crossing arcs
/// keep their cyclic order, so they are fixed by one offset modulo the
/// core twist; same-circle arcs fill the intervals between consecutive
/// crossing endpoints with non-crossing matchings.
fn annulus_matchings(m0: u32, m1: u32) -> Vec<Matching> {
    let mut out = Vec::new();
    for c in 1..=m0.min(m1) {
        if (m0 - c) % 2 != 0 || (m1 - c) % 2 != 0 {
            continue;
        }
        for s0 in subsets_with_even_gaps(m0, c) {
            for s1 in subsets_with_even_gaps(m1, c) {
                let mut options: Vec<(u8, Vec<Vec<(u32, u32)>>)> = Vec::new();
                for (circle, m, s) in [(0u8, m0, &s0), (1u8, m1, &s1)] {
                    for iv in gap_intervals(m, s) {
                        let choices = noncrossing(0, iv.len() as u32)
                            .into_iter()
                            .map(|nc| nc.iter().map(|&(i, j)| (iv[i as usize], iv[j as usize])).collect())
                            .collect();
                        options.push((circle, choices));
                    }
                }
                for offset in 0..c as usize {
                    let cross: Vec<(Mark, Mark)> =
                        (0..c as usize).map(|k| ((0, s0[k]), (1, s1[(k + offset) % c as usize]))).collect();
                    push_fillings(&cross, &options, &mut out);
                }
            }
        }
    }
    out
}

/// Pushes one family per choice of filling for every gap.
fn push_fillings(cross: &[(Mark, Mark)], options: &[(u8, Vec<Vec<(u32, u32)>>)], out: &mut Vec<Matching>) {
    let mut idx = alloc::vec![0usize; options.len()];
    loop {
        let mut pairs = cross.to_vec();
        for (k, (circle, choices)) in options.iter().enumerate() {
            pairs.extend(choices[idx[k]].iter().map(|&(i, j)| ((*circle, i), (*circle, j))));
        }
        pairs.sort();
        let crossing = pairs.iter().map(|(a, b)| a.0 != b.0).collect();
        out.push(Matching { pairs, crossing, puncture_gap: None });
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < options[k].1.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
}

/// Subsets of `0..m` of size `c` whose cyclic gaps all have even length.
fn subsets_with_even_gaps(m: u32, c: u32) -> Vec<Vec<u32>> {
    fn rec(m: u32, c: u32, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() as u32 == c {
            let even = (0..cur.len()).all(|k| (cur[(k + 1) % cur.len()] + m - cur[k] - 1) % m % 2 == 0);
            if even {
                out.push(cur.clone());
            }
            return;
        }
        for v in start..m {
            cur.push(v);
            rec(m, c, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, c, 0, &mut Vec::new(), &mut out);
    out
}

/// The cyclic intervals strictly between consecutive crossing endpoints.
fn gap_intervals(m: u32, s: &[u32]) -> Vec<Vec<u32>> {
    (0..s.len())
        .map(|k| {
            let a = s[k];
            let b = s[(k + 1) % s.len()];
            let len = (b + m - a - 1) % m;
            (1..=len).map(|t| (a + t) % m).collect()
        })
        .collect()
}
