//! Batch lens-space census over all coprime pairs up to a bound.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};
use tightcensus_core::census::{lens_census, lens_two_path};
use tightcensus_core::Result;

use crate::report::{envelope, int};

/// Largest `p` accepted by [`sweep`].
pub const MAX_SWEEP_P: u32 = 500;

/// One row of the sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub p: i64,
    pub q: i64,
    pub count: BigInt,
    pub unoriented: BigInt,
    pub euler_classes: usize,
    pub formula: BigInt,
    pub geometric: BigInt,
    pub agree: bool,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Rows for every coprime `0 < q < p <= p_max`, ordered by `(p, q)`,
/// computed in parallel.
pub fn sweep(p_max: u32) -> Result<Vec<SweepRow>> {
    let pairs: Vec<(i64, i64)> = (2..=p_max as i64)
        .flat_map(|p| (1..p).filter(move |&q| gcd(p, q) == 1).map(move |q| (p, q)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(p, q)| {
            let r = lens_census(p, q)?;
            let t = lens_two_path(p, q)?;
            Ok(SweepRow {
                p,
                q,
                count: r.oriented_count,
                unoriented: r.unoriented_count,
                euler_classes: r.euler_classes.len(),
                agree: t.agree(),
                formula: t.formula,
                geometric: t.geometric,
            })
        })
        .collect()
}

pub fn sweep_report(p_max: u32, rows: &[SweepRow]) -> Value {
    let all = rows.iter().all(|r| r.agree);
    let body = json!({
        "p_max": p_max,
        "pairs": rows.len(),
        "all_agree": all,
        "rows": rows
            .iter()
            .map(|r| {
                json!({
                    "p": r.p,
                    "q": r.q,
                    "count": int(&r.count),
                    "unoriented": int(&r.unoriented),
                    "euler_classes": r.euler_classes,
                    "two_path": if r.agree { "agree" } else { "disagree" },
                })
            })
            .collect::<Vec<_>>(),
    });
    envelope("sweep", "lens-space counts compared with the even gamma-value count of the finite edges", all, body)
}
