use rayon::prelude::*;

use crate::body::hull::KleinHull;
use crate::body::BallIntersection;
use crate::directions::direction_grid;
use crate::error::{GeometryError, Result};
use crate::lorentz::{from_klein, geodesic_point, to_klein, HPoint, TangentFrame};
use crate::metrology::width::point_set_diameter;

/// Settings for [`complete_hull`].
#[derive(Clone, Debug)]
pub struct CompletionParams {
    pub iters: usize,
    /// Boundary candidates of the current ball intersection per step.
    pub candidates: usize,
    /// Stop once no candidate is farther than this from the hull of the centers.
    pub tol: f64,
}

impl Default for CompletionParams {
    fn default() -> Self {
        Self {
            iters: 400,
            candidates: 512,
            tol: 1e-3,
        }
    }
}

/// A completed set with diagnostics.
#[derive(Clone, Debug)]
pub struct Completion {
    pub body: BallIntersection,
    pub added: usize,
    /// Distance from the last best candidate to the hull of the centers.
    pub final_gap: f64,
}

/// Greedy completion of a set of diameter at most `delta`: repeatedly adds
/// the boundary point of the current ball intersection farthest from the
/// hull of the centers, and returns the final intersection of
/// `delta`-balls. A single point yields the ball of radius `delta / 2`.
pub fn complete_hull(s: &[HPoint], delta: f64, params: &CompletionParams) -> Result<Completion> {
    let Some(first) = s.first() else {
        return Err(GeometryError::InvalidParameter("empty point set".into()));
    };
    let diam = point_set_diameter(s);
    if diam > delta * (1.0 + 1e-12) {
        return Err(GeometryError::DiameterTooLarge { diameter: diam, target: delta });
    }
    if s.iter().all(|p| p.distance(first) <= 1e-12) {
        return Ok(Completion {
            body: BallIntersection::ball(first.clone(), delta / 2.0)?,
            added: 0,
            final_gap: 0.0,
        });
    }
    let dim = first.dim();
    let grid = direction_grid(dim, params.candidates.max(1))?;
    let mut centers: Vec<HPoint> = s.to_vec();
    let mut added = 0;
    let mut final_gap = f64::INFINITY;
    for _ in 0..params.iters {
        let body = BallIntersection::new(centers.clone(), delta)?;
        let base = body.interior_point()?;
        let frame = TangentFrame::canonical(&base);
        let hull = KleinHull::new(&centers.iter().map(to_klein).collect::<Vec<_>>());
        let scored: Vec<(f64, HPoint)> = grid
            .par_iter()
            .map(|a| {
                let dir = frame.direction(a).expect("frame matches dimension");
                let x = geodesic_point(&dir, body.ray_exit(&dir));
                let proj = hull.project(&to_klein(&x), None);
                let d = from_klein(&proj.nearest).map_or(f64::INFINITY, |q| q.distance(&x));
                (d, x)
            })
            .collect();
        let mut best = 0;
        for (i, c) in scored.iter().enumerate() {
            if c.0 > scored[best].0 {
                best = i;
            }
        }
        final_gap = scored[best].0;
        if final_gap < params.tol {
            break;
        }
        centers.push(scored[best].1.clone());
        added += 1;
    }
    Ok(Completion {
        body: BallIntersection::new(centers, delta)?,
        added,
        final_gap,
    })
}

/// Largest difference of boundary distances along `rays` rays from a common
/// interior point; bounds the Hausdorff distance between star-shaped bodies.
pub fn radial_hausdorff(a: &BallIntersection, b: &BallIntersection, rays: usize) -> Result<f64> {
    let base = a.interior_point()?;
    if !b.contains(&base) {
        return Err(GeometryError::BaseNotInterior);
    }
    let frame = TangentFrame::canonical(&base);
    let grid = direction_grid(a.dim(), rays.max(1))?;
    Ok(grid
        .par_iter()
        .map(|d| {
            let dir = frame.direction(d).expect("frame matches dimension");
            (a.ray_exit(&dir) - b.ray_exit(&dir)).abs()
        })
        .reduce(|| 0.0, f64::max))
}
