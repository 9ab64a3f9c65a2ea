//! Per-manifold classifiers: lens spaces, torus bundles, thick and solid
//! tori, plus the surgery data and Legendrian constraints they rely on.

mod bundle;
mod lens;
mod torus;

pub use bundle::{bundle_census, BundleReport, DeltaImage, NCase, NValue, UniversallyTight};
pub use lens::{
    chain_link_weights, lens_census, lens_two_path, legendrian_check, ChainLink, LensReport, LensStructure,
    TwoPathCheck,
};
pub use torus::{
    non_vertical_points, solid_torus_census, thick_torus_cone, thick_torus_census, SolidReport, SuspensionKind, SuspensionSpec,
    ThickReport,
};
