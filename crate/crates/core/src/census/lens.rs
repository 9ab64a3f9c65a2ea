use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{chain_relations, continuants, neg_cf_expand, smith_presentation, NegCF, SmithPresentation};
use crate::gamma::{gamma_value_count, Parity};
use crate::sail::{finite_edge_points, sail_points, LatticeCone};
use crate::Result;

/// Largest number of structures listed one by one in a lens report.
const MAX_LISTED_STRUCTURES: u64 = 1 << 20;

/// Surgery presentation of a lens space on a chain of unknots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLink {
    /// Framings `-a_0, ..., -a_n`.
    pub weights: Vec<BigInt>,
    /// Relations among the meridians `mu_0, ..., mu_n`.
    pub relations: Vec<Vec<BigInt>>,
}

/// Framings and homology relations of the chain link for `p/q`.
pub fn chain_link_weights(p: i64, q: i64) -> Result<ChainLink> {
    let cf = neg_cf_expand(p, q)?;
    Ok(ChainLink {
        weights: cf.coeffs().iter().map(|a| -a).collect(),
        relations: chain_relations(cf.coeffs()),
    })
}

/// Whether a topologically trivial Legendrian knot can have Thurston-Bennequin
/// invariant `tb` and rotation number `m` in a tight manifold.
pub fn legendrian_check(tb: i64, m: i64) -> bool {
    let s = tb as i128 + (m as i128).abs();
    s <= -1 && s.rem_euclid(2) == 1
}

/// One tight structure of a lens space, labelled by its Legendrian
/// stabilization choices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LensStructure {
    /// `0 <= b_i <= a_i - 2`.
    pub b: Vec<i64>,
    /// Rotation numbers `2 - a_i + 2 b_i`.
    pub maslov: Vec<i64>,
    /// Euler class as a multiple of the image of `mu_0`, modulo `p`.
    pub euler: BigInt,
    /// `sum b_i p_i`.
    pub homotopy: BigInt,
}

/// Census of tight structures on the lens space `L(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LensReport {
    pub p: i64,
    pub q: i64,
    pub cf: NegCF,
    /// `prod (a_i - 1)`.
    pub oriented_count: BigInt,
    /// Half of the oriented count, rounded up.
    pub unoriented_count: BigInt,
    /// Universally tight structures up to isotopy: 2, or 1 when `q = p - 1`.
    pub universally_tight_oriented: u8,
    pub chain: ChainLink,
    pub homology: SmithPresentation,
    pub homology_order: BigInt,
    /// Continuants `p_0, ..., p_{n+1}`.
    pub continuants: Vec<BigInt>,
    /// Images `p_i mod p` of `mu_i` in units of the image of `mu_0`.
    pub mu_images: Vec<BigInt>,
    /// Euler classes `sum (2 - a_i + 2 b_i) p_i mod p` over all choices.
    pub euler_classes: BTreeSet<BigInt>,
    /// `sum b_i p_i` over all choices.
    pub homotopy_invariants: BTreeSet<BigInt>,
    /// Every choice of `b`, when there are few enough to list.
    pub structures: Option<Vec<LensStructure>>,
}

/// Applies the lens space classification to `L(p, q)`.
pub fn lens_census(p: i64, q: i64) -> Result<LensReport> {
    let cf = neg_cf_expand(p, q)?;
    let a: Vec<i64> = cf.coeffs().iter().map(|x| x.to_i64().expect("coefficients are bounded by p")).collect();
    let oriented_count = cf.product_minus_one();
    let unoriented_count = (&oriented_count + BigInt::one()).div_floor(&BigInt::from(2));
    let universally_tight_oriented = if q == p - 1 { 1 } else { 2 };
    let chain = chain_link_weights(p, q)?;
    let homology = smith_presentation(&chain.relations);
    let homology_order = homology.order.clone().unwrap_or_else(BigInt::zero);
    let cont = continuants(&cf);
    let pb = BigInt::from(p);
    let mu_images: Vec<BigInt> = cont[..a.len()].iter().map(|c| c.mod_floor(&pb)).collect();

    let mut euler_classes = BTreeSet::new();
    let mut homotopy_invariants = BTreeSet::new();
    let listed = oriented_count <= BigInt::from(MAX_LISTED_STRUCTURES);
    let mut structures = listed.then(Vec::new);
    if listed {
        let mut b = alloc::vec![0i64; a.len()];
        loop {
            let maslov: Vec<i64> = a.iter().zip(&b).map(|(ai, bi)| 2 - ai + 2 * bi).collect();
            let euler = maslov
                .iter()
                .zip(&cont)
                .fold(BigInt::zero(), |acc, (m, pi)| acc + BigInt::from(*m) * pi)
                .mod_floor(&pb);
            let homotopy = b.iter().zip(&cont).fold(BigInt::zero(), |acc, (bi, pi)| acc + BigInt::from(*bi) * pi);
            euler_classes.insert(euler.clone());
            homotopy_invariants.insert(homotopy.clone());
            if let Some(s) = structures.as_mut() {
                s.push(LensStructure { b: b.clone(), maslov, euler, homotopy });
            }
            // Odometer over 0 <= b_i <= a_i - 2.
            let mut i = 0;
            loop {
                if i == b.len() {
                    break;
                }
                if b[i] < a[i] - 2 {
                    b[i] += 1;
                    break;
                }
                b[i] = 0;
                i += 1;
            }
            if i == b.len() {
                break;
            }
        }
    }
    Ok(LensReport {
        p,
        q,
        cf,
        oriented_count,
        unoriented_count,
        universally_tight_oriented,
        chain,
        homology,
        homology_order,
        continuants: cont,
        mu_images,
        euler_classes,
        homotopy_invariants,
        structures,
    })
}

/// The oriented lens count computed twice: from the continued fraction and
/// from the γ values of the finite-edge points of the cone between `(0, 1)`
/// and `(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPathCheck {
    pub formula: BigInt,
    pub geometric: BigInt,
    /// The finite edges fit in the window used.
    pub complete: bool,
}

impl TwoPathCheck {
    pub fn agree(&self) -> bool {
        self.complete && self.formula == self.geometric
    }
}

/// Both counts for `L(p, q)`.
pub fn lens_two_path(p: i64, q: i64) -> Result<TwoPathCheck> {
    let cf = neg_cf_expand(p, q)?;
    let cone = LatticeCone::rational((0, 1), false, (p, q), false)?;
    let window = p.unsigned_abs().max(2);
    let sail = sail_points(&cone, window)?;
    let bhat = finite_edge_points(&sail, None);
    let values = gamma_value_count(&bhat.points, Parity::Even)?;
    Ok(TwoPathCheck {
        formula: cf.product_minus_one(),
        geometric: BigInt::from(values.count),
        complete: bhat.complete,
    })
}
