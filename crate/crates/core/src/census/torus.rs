use alloc::string::ToString;
use core::cmp::Ordering;

use num_bigint::BigInt;

use crate::arcs::{annulus_count, disk_count};
use crate::gamma::{xu_xv, xu_xv_solid, EulerSets, SolidEulerSets};
use crate::sail::{edge_points, sail_points, Direction, EdgeKind, EdgePointSet, IVec2, LatticeCone, PrimVec, RayBound, Sail};
use crate::{Error, Result};

/// Dynamical type of a boundary suspension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuspensionKind {
    /// Topologically linear: all orbits closed or all dense.
    Type0,
    /// Two non-degenerate closed orbits with the others spiralling between them.
    Type1,
}

/// A boundary suspension given by its asymptotic half-line and type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuspensionSpec {
    pub direction: Direction,
    pub kind: SuspensionKind,
    /// Number of pairs of dividing curves: 0 for type 0, positive for type 1.
    pub dividing_pairs: u32,
}

impl SuspensionSpec {
    pub fn new(direction: Direction, kind: SuspensionKind, dividing_pairs: u32) -> Result<Self> {
        match (kind, dividing_pairs) {
            (SuspensionKind::Type0, 0) => {}
            (SuspensionKind::Type1, n) if n >= 1 => {}
            (SuspensionKind::Type0, _) => {
                return Err(Error::InvalidSuspension("a type 0 suspension has no dividing curves".to_string()))
            }
            (SuspensionKind::Type1, _) => {
                return Err(Error::InvalidSuspension("a type 1 suspension needs at least one pair".to_string()))
            }
        }
        if kind == SuspensionKind::Type1 && !direction.is_rational() {
            return Err(Error::InvalidSuspension("closed orbits force a rational direction".to_string()));
        }
        Ok(SuspensionSpec { direction, kind, dividing_pairs })
    }

    pub fn type0(direction: Direction) -> Self {
        SuspensionSpec { direction, kind: SuspensionKind::Type0, dividing_pairs: 0 }
    }

    pub fn type1(direction: PrimVec, dividing_pairs: u32) -> Result<Self> {
        SuspensionSpec::new(Direction::Lattice(direction), SuspensionKind::Type1, dividing_pairs)
    }

    fn closed(&self) -> bool {
        self.kind == SuspensionKind::Type1
    }
}

/// Census of tight structures on the thick torus with given boundary suspensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThickReport {
    pub cone: LatticeCone,
    pub sail: Sail,
    pub sets: EulerSets,
    /// π-torsion values listed for the universally tight family.
    pub torsion_max: u32,
    /// Both suspensions are of type 1 with the same asymptotic line.
    pub exceptional: bool,
    /// Euler classes `(0, 0)` and `2w`, `w` the primitive vector on the left boundary.
    pub exceptional_fibers: Option<[IVec2; 2]>,
    /// The same pair with `w` replaced by `-w`.
    pub exceptional_fibers_reversed: Option<[IVec2; 2]>,
    /// Components per fiber of the universally tight part: `C(2n0, n0) C(2n1, n1)`.
    pub ut_components_per_fiber: BigInt,
    /// Extra components collapsed to one orbit in the exceptional case.
    pub extra_orbit_count: Option<BigInt>,
}

/// The cone with left boundary the half-line of `s0` and right boundary
/// the half-line of `s1`'s line making the cone convex.
pub fn thick_torus_cone(s0: &SuspensionSpec, s1: &SuspensionSpec) -> Result<LatticeCone> {
    let d0 = s0.direction.clone();
    let d1 = match d0.wedge_sign(&s1.direction) {
        Ordering::Less => s1.direction.clone(),
        Ordering::Greater => s1.direction.neg(),
        Ordering::Equal => d0.neg(),
    };
    if !d0.is_rational() && d0.opposite_ray(&d1) {
        return Err(Error::Unsupported("half-plane bounded by an irrational line".to_string()));
    }
    LatticeCone::new(RayBound::new(d0, s0.closed())?, RayBound::new(d1, s1.closed())?)
}

/// Applies the thick torus classification.
pub fn thick_torus_census(s0: &SuspensionSpec, s1: &SuspensionSpec, torsion_max: u32, window: u64) -> Result<ThickReport> {
    let cone = thick_torus_cone(s0, s1)?;
    let sail = sail_points(&cone, window)?;
    let sets = xu_xv(&sail)?;
    let exceptional = s0.closed() && s1.closed() && cone.is_degenerate();
    let (fibers, reversed) = if exceptional {
        let w = cone.left().direction().as_lattice().expect("type 1 directions are rational").vec();
        (
            Some([IVec2::ZERO, IVec2::new(2 * w.x, 2 * w.y)]),
            Some([IVec2::ZERO, IVec2::new(-2 * w.x, -2 * w.y)]),
        )
    } else {
        (None, None)
    };
    let (n0, n1) = (s0.dividing_pairs, s1.dividing_pairs);
    let ut = disk_count(n0) * disk_count(n1);
    let extra = exceptional.then(|| annulus_count(n0, n1));
    Ok(ThickReport {
        cone,
        sail,
        sets,
        torsion_max,
        exceptional,
        exceptional_fibers: fibers,
        exceptional_fibers_reversed: reversed,
        ut_components_per_fiber: ut,
        extra_orbit_count: extra,
    })
}

/// Census of tight structures on the solid torus with boundary suspension `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolidReport {
    pub cone: LatticeCone,
    pub sail: Sail,
    /// Points on edges not parallel to the meridian `(0, 1)`.
    pub bhat: EdgePointSet,
    pub sets: SolidEulerSets,
}

/// Applies the solid torus classification. The meridian half-line
/// `(0, -1)` bounds the cone on the left, open; the half-line of `s` with
/// negative first coordinate bounds it on the right.
pub fn solid_torus_census(s: &SuspensionSpec, window: u64) -> Result<SolidReport> {
    let meridian = Direction::lattice(0, -1)?;
    let d = match meridian.wedge_sign(&s.direction) {
        Ordering::Less => s.direction.clone(),
        Ordering::Greater => s.direction.neg(),
        Ordering::Equal => return Err(Error::DegenerateBoundarySlope),
    };
    let cone = LatticeCone::new(RayBound::new(meridian, false)?, RayBound::new(d, s.closed())?)?;
    let sail = sail_points(&cone, window)?;
    let bhat = non_vertical_points(&sail);
    let sets = xu_xv_solid(&bhat)?;
    Ok(SolidReport { cone, sail, bhat, sets })
}

/// Points of the sail on edges not parallel to `(0, 1)`.
pub fn non_vertical_points(s: &Sail) -> EdgePointSet {
    edge_points(s, |_: EdgeKind, dir: IVec2| dir.x != 0)
}
