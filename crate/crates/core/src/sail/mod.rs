//! Planar lattice cones, the boundary chain of the convex hull of their
//! integer points, dual cones and facet solution sets.

mod cone;
mod dual;
mod hull;
mod vec2;

pub use cone::{cone_contains, Direction, LatticeCone, RayBound};
pub use dual::{dual_cone, dual_sail, facet_solutions, slope_from_facets, slope_in_basis, DualPoint, DualSail};
pub use hull::{
    edge_points, finite_edge_points, is_interior_point, sail_points, EdgeKind, EdgePointSet, EndKind,
    Sail, SailEdge,
};
pub use vec2::{IVec2, PrimVec};
