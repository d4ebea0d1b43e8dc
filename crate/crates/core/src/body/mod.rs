//! Convex bodies: vertex polytopes and intersections of equal-radius balls.

mod ball_intersection;
pub(crate) mod hull;
mod polytope;
mod support;

pub use ball_intersection::{chord_sag, discretize, BallIntersection, Discretization};
pub use polytope::{boundary_sample, hull_contains, interior_reference, Polytope};
pub use support::{farthest_from_hyperplane, pencil_support, Farthest, PencilSupport, Side};
pub(crate) use support::pencil_support_unchecked;
