//! Argument handling and dispatch.

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};
use tightcensus_core::arcs::{annulus_count, disk_count, enumerate_matchings, ArcProblem};
use tightcensus_core::arith::{neg_cf_expand, quadratic_neg_cf, QuadraticIrrational, Sl2Mat};
use tightcensus_core::census::{
    bundle_census, lens_census, lens_two_path, solid_torus_census, thick_torus_census, NValue,
};
use tightcensus_core::gamma::{gamma_values_exhaustive, retournement_candidates, Parity};
use tightcensus_core::sail::{dual_sail, finite_edge_points, is_interior_point, sail_points, LatticeCone, RayBound};
use tightcensus_core::{Error, DEFAULT_ENUM_CAP, MAX_ENUM_CAP};

use crate::args::{parse_direction, parse_primitive, parse_suspension, parse_vec};
use crate::format::{render, Format};
use crate::report;
use crate::sweep::{sweep, sweep_report, MAX_SWEEP_P};

/// Environment variable overriding the subset enumeration cap.
pub const ENUM_CAP_VAR: &str = "CENSUS_ENUM_CAP";

#[derive(Debug, Parser)]
#[command(name = "tightcensus", version, about = "Counts of tight contact structures and the lattice geometry behind them")]
struct Cli {
    /// Coordinate bound for listed sail points.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    window: u64,
    /// Largest torsion value listed for universally tight families.
    #[arg(long = "torsion-max", global = true, default_value_t = 3)]
    torsion_max: u32,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tight structures on the lens space L(p, q).
    #[command(allow_negative_numbers = true)]
    Lens { p: i64, q: i64 },
    /// Tight structures on the torus bundle with monodromy [[a, b], [c, d]].
    #[command(allow_negative_numbers = true)]
    Bundle { a: String, b: String, c: String, d: String },
    /// Tight structures on the thick torus between two boundary suspensions.
    Thick {
        /// Left suspension: `x,y` or `q:P:D:Q` for type 0, `x,y/N` for type 1.
        #[arg(allow_hyphen_values = true)]
        s0: String,
        /// Right suspension, same syntax.
        #[arg(allow_hyphen_values = true)]
        s1: String,
        /// List the subsets whose doubled gamma equals this vector.
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<String>,
    },
    /// Tight structures on the solid torus with a boundary suspension.
    Solid {
        /// Boundary suspension, same syntax as for `thick`.
        #[arg(allow_hyphen_values = true)]
        s: String,
    },
    /// Negative continued fraction of p/q, or of a quadratic surd.
    #[command(allow_negative_numbers = true)]
    Cf {
        /// Numerator.
        p: Option<String>,
        /// Denominator.
        q: Option<String>,
        /// The surd (P + sqrt D)/Q written `P,D,Q`.
        #[arg(long, allow_hyphen_values = true)]
        surd: Option<String>,
    },
    /// Sail of the cone swept clockwise from LEFT to RIGHT.
    Sail {
        /// Left boundary direction: `x,y`, `q:P:D:Q` or `nq:P:D:Q`.
        #[arg(allow_hyphen_values = true)]
        left: String,
        /// Right boundary direction, reached clockwise from the left one.
        #[arg(allow_hyphen_values = true)]
        right: String,
        /// Include the left boundary ray in the cone.
        #[arg(long)]
        left_closed: bool,
        /// Include the right boundary ray in the cone.
        #[arg(long)]
        right_closed: bool,
        /// Also report the dual sail with its facets.
        #[arg(long)]
        dual: bool,
        /// Also enumerate the even gamma values of the finite-edge points.
        #[arg(long)]
        gamma: bool,
        /// Test whether this interior primitive point lies off the sail.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Disjoint arc families on the punctured disk or the annulus.
    Arcs {
        #[command(subcommand)]
        surface: Surface,
        /// List every family.
        #[arg(long, global = true)]
        list: bool,
    },
    /// Lens census over every coprime pair with p <= P_MAX.
    Sweep {
        /// Largest p, at most 500.
        p_max: u32,
    },
    /// Internal consistency checks between independent computations.
    Selftest,
}

#[derive(Debug, Subcommand)]
enum Surface {
    /// Once-punctured disk with 2n boundary points.
    Disk { n: u32 },
    /// Annulus with 2·n0 and 2·n1 points on its two boundary circles.
    Annulus { n0: u32, n1: u32 },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Guard(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EnumerationGuard { .. } => Failure::Guard(e.to_string()),
            Error::NotCoprime
            | Error::OutOfRange(_)
            | Error::InvalidSurd(_)
            | Error::NotInSl2(_)
            | Error::ZeroVector
            | Error::NotPrimitive(..)
            | Error::InvalidCone(_)
            | Error::NotInteriorToCone
            | Error::OddTarget
            | Error::DegenerateBoundarySlope
            | Error::InvalidSuspension(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn usage(s: String) -> Failure {
    Failure::Usage(s)
}

/// The subset enumeration cap: the environment override, clamped to the
/// hard limit, or the default.
pub fn enum_cap() -> Result<usize, String> {
    match std::env::var(ENUM_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|c| c.min(MAX_ENUM_CAP))
            .map_err(|_| format!("{ENUM_CAP_VAR} must be a non-negative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn big(s: &str) -> Result<BigInt, Failure> {
    BigInt::from_str(s.trim()).map_err(|_| usage(format!("not an integer: {s:?}")))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code() as u8;
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok(v) => {
            let failed_checks = v.get("all_pass") == Some(&Value::Bool(false));
            Outcome { code: if failed_checks { 1 } else { 0 }, stdout: render(&v, cli.format), stderr: String::new() }
        }
        Err(Failure::Usage(m)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Guard(m)) => Outcome { code: 3, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Runtime(m)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}

fn dispatch(cli: &Cli) -> Result<Value, Failure> {
    let cap = enum_cap().map_err(usage)?;
    match &cli.command {
        Command::Lens { p, q } => {
            let r = lens_census(*p, *q)?;
            let t = lens_two_path(*p, *q)?;
            Ok(report::lens(&r, &t))
        }
        Command::Bundle { a, b, c, d } => {
            let m = Sl2Mat::new(big(a)?, big(b)?, big(c)?, big(d)?)?;
            Ok(report::bundle(&bundle_census(&m)?, cli.torsion_max))
        }
        Command::Thick { s0, s1, chi } => {
            let s0 = parse_suspension(s0).map_err(usage)?;
            let s1 = parse_suspension(s1).map_err(usage)?;
            let r = thick_torus_census(&s0, &s1, cli.torsion_max, cli.window)?;
            match chi {
                Some(chi) => {
                    let chi = parse_vec(chi).map_err(usage)?;
                    let c = retournement_candidates(&r.sail, chi, cap)?;
                    Ok(report::thick(&r, Some((chi, &c))))
                }
                None => Ok(report::thick(&r, None)),
            }
        }
        Command::Solid { s } => {
            let s = parse_suspension(s).map_err(usage)?;
            Ok(report::solid(&solid_torus_census(&s, cli.window)?))
        }
        Command::Cf { p, q, surd } => match (p, q, surd) {
            (Some(p), Some(q), None) => {
                let (p, q) = (big(p)?, big(q)?);
                let cf = neg_cf_expand(p.clone(), q.clone())?;
                Ok(report::cf_rational(&p, &q, &cf))
            }
            (None, None, Some(s)) => {
                let parts: Vec<&str> = s.split(',').collect();
                let [p, d, q] = parts.as_slice() else {
                    return Err(usage(format!("expected P,D,Q, got {s:?}")));
                };
                let z = QuadraticIrrational::new(big(p)?, big(d)?, big(q)?)?;
                Ok(report::cf_quadratic(&z, &quadratic_neg_cf(&z)))
            }
            _ => Err(usage("cf takes either P Q or --surd P,D,Q".into())),
        },
        Command::Sail { left, right, left_closed, right_closed, dual, gamma, point } => {
            let l = RayBound::new(parse_direction(left).map_err(usage)?, *left_closed)?;
            let r = RayBound::new(parse_direction(right).map_err(usage)?, *right_closed)?;
            let c = LatticeCone::new(l, r)?;
            let s = sail_points(&c, cli.window)?;
            let finite = finite_edge_points(&s, None);
            let ds = if *dual { Some(dual_sail(&c, cli.window)?) } else { None };
            let values = if *gamma { Some(gamma_values_exhaustive(&finite.points, Parity::Even, cap)?) } else { None };
            let interior = match point {
                Some(pt) => {
                    let w = parse_primitive(pt).map_err(usage)?;
                    Some((w, is_interior_point(&c, w)?))
                }
                None => None,
            };
            Ok(report::sail_report(&c, &s, &finite, ds.as_ref(), values.as_ref(), interior))
        }
        Command::Arcs { surface, list } => {
            let problem = match surface {
                Surface::Disk { n } => ArcProblem::PuncturedDisk(*n),
                Surface::Annulus { n0, n1 } => ArcProblem::Annulus(*n0, *n1),
            };
            Ok(report::arcs(problem, *list)?)
        }
        Command::Sweep { p_max } => {
            if *p_max > MAX_SWEEP_P {
                return Err(usage(format!("sweep bound {p_max} exceeds {MAX_SWEEP_P}")));
            }
            Ok(sweep_report(*p_max, &sweep(*p_max)?))
        }
        Command::Selftest => Ok(selftest()?),
    }
}

fn check(name: &str, pass: bool) -> Value {
    json!({ "name": name, "pass": pass })
}

/// Cross-checks between computations that reach the same numbers by
/// different routes.
fn selftest() -> Result<Value, Error> {
    let mut checks = Vec::new();
    let mut two_path = true;
    let mut order = true;
    for p in 2..=20i64 {
        for q in 1..p {
            let r = match lens_census(p, q) {
                Ok(r) => r,
                Err(Error::NotCoprime) => continue,
                Err(e) => return Err(e),
            };
            two_path &= lens_two_path(p, q)?.agree();
            order &= r.homology_order == BigInt::from(p) && r.homology.is_cyclic();
        }
    }
    checks.push(check("lens count equals even gamma count, p <= 20", two_path));
    checks.push(check("chain-link homology is cyclic of order p, p <= 20", order));
    let spot = (2..=10i64).all(|p| {
        lens_census(p, 1).map(|r| r.oriented_count == BigInt::from(p - 1)).unwrap_or(false)
            && lens_census(p, p - 1).map(|r| r.oriented_count == BigInt::from(1)).unwrap_or(false)
    });
    checks.push(check("L(p, 1) has p - 1 and L(p, p - 1) has 1, p <= 10", spot));
    let disk = (0..=4u32).all(|n| {
        enumerate_matchings(ArcProblem::PuncturedDisk(n)).map(|v| BigInt::from(v.len()) == disk_count(n)).unwrap_or(false)
    });
    checks.push(check("disk families: enumeration equals C(2n, n), n <= 4", disk));
    let annulus = (0..=5u32).all(|t| {
        (0..=t).all(|n0| {
            enumerate_matchings(ArcProblem::Annulus(n0, t - n0))
                .map(|v| BigInt::from(v.len()) == annulus_count(n0, t - n0))
                .unwrap_or(false)
        })
    });
    checks.push(check("annulus families: enumeration equals the closed form, n0 + n1 <= 5", annulus));
    let n = |a: i64, b: i64, c: i64, d: i64| -> Result<NValue, Error> { Ok(bundle_census(&Sl2Mat::new(a, b, c, d)?)?.n) };
    let ex = |v: i64| NValue::Exact(BigInt::from(v));
    let bundle = n(1, 0, -5, 1)? == ex(4)
        && n(1, 0, -3, 1)? == ex(2)
        && n(1, 0, 3, 1)? == ex(0)
        && n(2, 1, 1, 1)? == ex(0)
        && n(5, 3, 3, 2)? == ex(2);
    checks.push(check("torus-bundle spot values", bundle));
    let all = checks.iter().all(|c| c["pass"] == json!(true));
    Ok(report::envelope("selftest", "agreement of independent computations", all, json!({ "all_pass": all, "checks": checks })))
}
