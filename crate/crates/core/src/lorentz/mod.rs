//! Primitives of the hyperboloid model: the Minkowski form, sheet points,
//! geodesics, hyperplanes and their pencils, equidistant strips, model
//! conversions and isometries.

mod frame;
mod hyperplane;
mod isometry;
mod models;
mod point;
mod vector;

pub use frame::TangentFrame;
pub use hyperplane::{
    dist_hh, hyperplane_relation, in_strip, pencil_hyperplane, pencil_param, project_ph,
    signed_dist_ph, EquidistantStrip, Hyperplane, HyperplaneRelation,
};
pub use isometry::Isometry;
pub use models::{from_klein, from_poincare, klein_to_poincare, to_klein, to_poincare};
pub use point::{dist_pp, geodesic_point, Ball, HPoint, UnitTangent};
pub use vector::{mink, LorentzVector};
