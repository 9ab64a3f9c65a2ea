//! Exact combinatorial kernel for counting tight contact structures on lens
//! spaces, torus bundles, solid tori and thick tori.
//!
//! The crate is `no_std` and only needs an allocator. Every computation is
//! exact: integers are arbitrary precision, rationals are reduced fractions
//! and quadratic irrationals are handled through integer comparisons.
//!
//! Modules, bottom-up:
//! - [`arith`]: rationals, quadratic surds, negative continued fractions,
//!   continuants, `SL2(Z)` classification and Smith normal form.
//! - [`sail`]: planar lattice cones, the boundary chain of the convex hull of
//!   their integer points, dual cones and facet solution sets.
//! - [`gamma`]: the alternating sum of an ordered subset of sail points and the
//!   value sets built from it.
//! - [`census`]: per-manifold classifiers assembling the above.
//! - [`arcs`]: closed forms and brute-force enumeration of disjoint arc
//!   families on the punctured disk and the annulus.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arcs;
pub mod arith;
pub mod census;
mod error;
pub mod gamma;
pub mod sail;

pub use error::Error;

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Default number of points above which explicit subset enumeration refuses
/// to run.
pub const DEFAULT_ENUM_CAP: usize = 24;

/// Hard upper limit accepted for the subset enumeration cap.
pub const MAX_ENUM_CAP: usize = 28;
