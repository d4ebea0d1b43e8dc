use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::body::{pencil_support_unchecked, BallIntersection, Polytope, Side};
use crate::directions::direction_grid;
use crate::error::Result;
use crate::lorentz::{geodesic_point, HPoint, Hyperplane, UnitTangent};
use crate::metrology::search::{max_width, thickness, width_profile, SearchOptions};
use crate::metrology::width::{diameter, point_set_diameter};
use crate::EPS_CONTACT;

/// Evidence attached to a check: the worst offender found.
#[derive(Clone, Debug)]
pub enum Witness {
    Point(HPoint),
    Direction {
        direction: UnitTangent,
        side: Side,
        hyperplane: Hyperplane,
    },
    Contact {
        hyperplane: Hyperplane,
        points: Vec<HPoint>,
    },
}

/// Outcome of a property check; `passed` iff `spread <= tolerance`.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub passed: bool,
    pub target: f64,
    pub spread: f64,
    pub tolerance: f64,
    pub worst_witness: Option<Witness>,
    /// Named intermediate values.
    pub details: BTreeMap<String, f64>,
}

impl CheckReport {
    fn new(target: f64, spread: f64, tolerance: f64, witness: Option<Witness>, details: BTreeMap<String, f64>) -> Self {
        Self {
            passed: spread <= tolerance,
            target,
            spread,
            tolerance,
            worst_witness: witness,
            details,
        }
    }
}

fn details<const N: usize>(items: [(&str, f64); N]) -> BTreeMap<String, f64> {
    items.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Constant width `delta`: widths over the direction grid (both pencil
/// sides, with refined minimum and maximum) must all be within `tol` of one
/// another and their mean within `tol` of `delta`. The spread is the larger
/// of the two deviations.
pub fn check_constant_width(c: &Polytope, delta: f64, tol: f64, opts: &SearchOptions) -> Result<CheckReport> {
    let frame = c.intrinsic_frame();
    let profile = width_profile(c, &frame, opts.grid_for(c.dim()))?;
    let th = thickness(c, opts)?;
    let mx = max_width(c, opts)?;
    let min = th.value.min(profile.min());
    let max = mx.value.max(profile.max());
    let mean = profile.mean();
    let range = max - min;
    let spread = range.max((mean - delta).abs());
    let worst = if (delta - th.value).abs() >= (mx.value - delta).abs() { th } else { mx };
    Ok(CheckReport::new(
        delta,
        spread,
        tol,
        Some(Witness::Direction {
            direction: worst.direction,
            side: worst.side,
            hyperplane: worst.hyperplane,
        }),
        details([("min_width", min), ("max_width", max), ("mean_width", mean), ("range", range)]),
    ))
}

/// Constant diameter `delta`: every probe (boundary samples and vertices)
/// must have a point of the body at distance at least `delta - tol`, and
/// the diameter must be `delta` within `tol`.
pub fn check_constant_diameter(c: &Polytope, delta: f64, tol: f64, samples: usize) -> Result<CheckReport> {
    let diam = diameter(c).value;
    let mut probes = c.boundary_sample(samples);
    probes.extend(c.vertices().iter().cloned());
    let shortfalls: Vec<f64> = probes
        .par_iter()
        .map(|p| {
            let far = c.vertices().iter().map(|v| p.distance(v)).fold(0.0, f64::max);
            delta - far
        })
        .collect();
    let mut worst = 0;
    for (i, s) in shortfalls.iter().enumerate() {
        if *s > shortfalls[worst] {
            worst = i;
        }
    }
    let shortfall = shortfalls[worst].max(0.0);
    let spread = shortfall.max((diam - delta).abs());
    Ok(CheckReport::new(
        delta,
        spread,
        tol,
        Some(Witness::Point(probes[worst].clone())),
        details([
            ("diameter", diam),
            ("worst_shortfall", shortfall),
            ("probes", probes.len() as f64),
        ]),
    ))
}

/// Completeness at diameter `delta`: the intersection of the balls of
/// radius `delta` about the vertices must not reach farther than `tol`
/// beyond the body along any of `rays` rays from the reference point. For a
/// polytope the vertices give the same ball intersection as all its points.
pub fn check_complete(c: &Polytope, delta: f64, tol: f64, rays: usize) -> Result<CheckReport> {
    let diam = diameter(c).value;
    if diam > delta + tol {
        return Ok(CheckReport::new(
            delta,
            diam - delta,
            tol,
            None,
            details([("diameter", diam)]),
        ));
    }
    let hull = BallIntersection::new(c.vertices().to_vec(), delta)?;
    let frame = c.intrinsic_frame();
    let base = c.interior_reference();
    let grid = direction_grid(c.dim(), rays.max(1))?;
    let gaps: Vec<(f64, f64)> = grid
        .par_iter()
        .map(|a| {
            let dir = frame.direction(a).expect("frame matches dimension");
            let t_body = base.distance(&c.ray_exit(&dir));
            let t_hull = hull.ray_exit(&dir);
            (t_hull - t_body, t_hull)
        })
        .collect();
    let mut worst = 0;
    for (i, g) in gaps.iter().enumerate() {
        if g.0 > gaps[worst].0 {
            worst = i;
        }
    }
    let dir = frame.direction(&grid[worst])?;
    let x = geodesic_point(&dir, gaps[worst].1);
    let reach = c.vertices().iter().map(|v| x.distance(v)).fold(0.0, f64::max);
    let gap = gaps[worst].0.max(0.0);
    Ok(CheckReport::new(
        delta,
        gap.max((diam - delta).abs()),
        tol,
        Some(Witness::Point(x)),
        details([
            ("diameter", diam),
            ("max_gap", gap),
            ("witness_max_distance", reach),
        ]),
    ))
}

/// Strict convexity: the contact set of every sampled supporting hyperplane
/// (both pencil sides of the direction grid, and in the plane every edge
/// line) must have diameter at most `tol`.
pub fn check_strict_convexity(c: &Polytope, tol: f64, opts: &SearchOptions) -> Result<CheckReport> {
    let frame = c.intrinsic_frame();
    let grid = direction_grid(c.dim(), opts.grid_for(c.dim()))?;
    let mut planes: Vec<Hyperplane> = grid
        .par_iter()
        .flat_map_iter(|a| {
            let s = pencil_support_unchecked(c, &frame.direction(a).expect("frame matches dimension"));
            [s.h_minus, s.h_plus]
        })
        .collect();
    if c.dim() == 2 {
        let cycle = c.boundary_cycle()?;
        let n = cycle.len();
        for k in 0..n {
            let a = c.vertex(cycle[k]).clone();
            let b = c.vertex(cycle[(k + 1) % n]).clone();
            planes.push(Hyperplane::through_points(&[a, b])?.oriented_toward(c.interior_reference()));
        }
    }
    let spans: Vec<(f64, Vec<usize>)> = planes
        .par_iter()
        .map(|h| {
            let idx: Vec<usize> = (0..c.len())
                .filter(|&i| h.signed_distance(c.vertex(i)).abs() <= EPS_CONTACT)
                .collect();
            let pts: Vec<HPoint> = idx.iter().map(|&i| c.vertex(i).clone()).collect();
            (point_set_diameter(&pts), idx)
        })
        .collect();
    let mut worst = 0;
    for (i, s) in spans.iter().enumerate() {
        if s.0 > spans[worst].0 {
            worst = i;
        }
    }
    let spread = spans[worst].0;
    Ok(CheckReport::new(
        0.0,
        spread,
        tol,
        Some(Witness::Contact {
            hyperplane: planes[worst].clone(),
            points: spans[worst].1.iter().map(|&i| c.vertex(i).clone()).collect(),
        }),
        details([("max_contact_diameter", spread), ("hyperplanes", planes.len() as f64)]),
    ))
}
