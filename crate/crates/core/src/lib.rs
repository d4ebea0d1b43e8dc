//! Width, thickness and diameter of convex bodies in hyperbolic space.
//!
//! Bodies live in the hyperboloid model of H^d: points are vectors `p` of
//! R^{d,1} with `<p,p> = -1` on the upper sheet, hyperplanes are unit
//! spacelike normals. Convex bodies are represented as hulls of finitely many
//! points ([`body::Polytope`]) or as intersections of equal-radius balls
//! ([`body::BallIntersection`]), the latter discretized before measurement.

pub mod body;
pub mod constructions;
pub mod directions;
pub mod error;
pub mod lorentz;
pub mod metrology;

pub use error::{GeometryError, Result};

/// Relative tolerance for on-manifold invariants (sheet, unit normals).
pub const EPS_NORM: f64 = 1e-10;
/// Tolerance for the intersecting / boundary-parallel / ultraparallel split.
pub const EPS_CLASS: f64 = 1e-9;
/// Tolerance for contact-set membership.
pub const EPS_CONTACT: f64 = 1e-8;
/// Klein-coordinate residual below which a point counts as inside a hull.
pub const EPS_HULL: f64 = 1e-12;
