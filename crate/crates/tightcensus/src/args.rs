//! Parsers for the textual forms of directions, suspensions and vectors.

use tightcensus_core::arith::QuadraticIrrational;
use tightcensus_core::sail::{Direction, IVec2, PrimVec};
use tightcensus_core::census::SuspensionSpec;

fn int(s: &str) -> Result<i64, String> {
    s.trim().parse::<i64>().map_err(|_| format!("not an integer: {s:?}"))
}

/// An integer pair written `x,y`.
pub fn parse_vec(s: &str) -> Result<IVec2, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected x,y, got {s:?}"))?;
    Ok(IVec2::new(int(x)?, int(y)?))
}

/// A primitive vector written `x,y`.
pub fn parse_primitive(s: &str) -> Result<PrimVec, String> {
    let v = parse_vec(s)?;
    PrimVec::try_from_vec(v).map_err(|e| e.to_string())
}

/// A half-line: `x,y` for a primitive lattice vector, `q:P:D:Q` for the
/// direction `(z, 1)` with `z = (P + sqrt D)/Q`, and `nq:P:D:Q` for `-(z, 1)`.
pub fn parse_direction(s: &str) -> Result<Direction, String> {
    let (positive, rest) = if let Some(r) = s.strip_prefix("q:") {
        (true, r)
    } else if let Some(r) = s.strip_prefix("nq:") {
        (false, r)
    } else {
        return parse_primitive(s).map(Direction::Lattice);
    };
    let parts: Vec<&str> = rest.split(':').collect();
    let [p, d, q] = parts.as_slice() else {
        return Err(format!("expected q:P:D:Q, got {s:?}"));
    };
    let z = QuadraticIrrational::new(int(p)?, int(d)?, int(q)?).map_err(|e| e.to_string())?;
    Ok(Direction::quadratic(z, positive))
}

/// A boundary suspension: a direction alone for type 0, or `DIR/N` for
/// type 1 with `N` pairs of dividing curves.
pub fn parse_suspension(s: &str) -> Result<SuspensionSpec, String> {
    match s.rsplit_once('/') {
        Some((dir, n)) => {
            let d = parse_direction(dir)?;
            let n: u32 = n.trim().parse().map_err(|_| format!("not a pair count: {n:?}"))?;
            SuspensionSpec::new(d, tightcensus_core::census::SuspensionKind::Type1, n).map_err(|e| e.to_string())
        }
        None => Ok(SuspensionSpec::type0(parse_direction(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tightcensus_core::census::SuspensionKind;

    #[test]
    fn directions() {
        assert_eq!(parse_direction("-1,2").unwrap(), Direction::lattice(-1, 2).unwrap());
        assert!(parse_direction("2,4").is_err());
        let z = QuadraticIrrational::new(3, 5, 2).unwrap();
        assert_eq!(parse_direction("q:3:5:2").unwrap(), Direction::quadratic(z.clone(), true));
        assert_eq!(parse_direction("nq:3:5:2").unwrap(), Direction::quadratic(z, false));
        assert!(parse_direction("q:1:4:1").is_err());
    }

    #[test]
    fn suspensions() {
        let s = parse_suspension("1,0/2").unwrap();
        assert_eq!((s.kind, s.dividing_pairs), (SuspensionKind::Type1, 2));
        assert_eq!(parse_suspension("0,1").unwrap().kind, SuspensionKind::Type0);
        assert!(parse_suspension("1,0/0").is_err());
        assert!(parse_suspension("q:3:5:2/1").is_err());
    }
}
