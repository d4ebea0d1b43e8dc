//! Closed-form quantities and fixture bodies: regular triangles and
//! tetrahedra, balls and their orthant parts, Reuleaux polygons and the
//! equidistant-arc body whose thickness hyperplane meets it in one point.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use rand::Rng;

use crate::body::{BallIntersection, Polytope};
use crate::error::{GeometryError, Result};
use crate::lorentz::{HPoint, Hyperplane, LorentzVector, UnitTangent};

fn check_positive(name: &str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(GeometryError::InvalidParameter(format!("{name} must be positive, got {x}")))
    }
}

/// Height of the regular triangle with side `2x`: `acosh(cosh 2x / cosh x)`.
pub fn triangle_height(x: f64) -> f64 {
    ((2.0 * x).cosh() / x.cosh()).max(1.0).acosh()
}

/// Circumradius of the regular triangle with side `2x`.
pub fn triangle_circumradius(x: f64) -> f64 {
    ((4.0f64 / 3.0).sqrt() * x.sinh()).asinh()
}

/// Circumradius of the regular tetrahedron with edge `2x`.
pub fn tetrahedron_circumradius(x: f64) -> f64 {
    (1.5f64.sqrt() * x.sinh()).asinh()
}

/// Width of the regular tetrahedron with edge `2x` determined by a facet plane.
pub fn simplex_facet_width(x: f64) -> f64 {
    ((2.0 * x).cosh() / triangle_circumradius(x).cosh()).max(1.0).acosh()
}

/// Width of the regular tetrahedron with edge `2x` determined by the plane
/// through an edge orthogonal to the common perpendicular of opposite edges.
pub fn simplex_edge_width(x: f64) -> f64 {
    let mn = ((2.0 * x).cosh() / x.cosh().powi(2)).max(1.0).acosh();
    lambert_side(mn, x)
}

/// `29 l^2 - 36 l + 7`.
pub fn remark2_polynomial(l: f64) -> f64 {
    (29.0 * l - 36.0) * l + 7.0
}

/// Roots of [`remark2_polynomial`], ascending.
pub fn remark2_roots() -> (f64, f64) {
    let (a, b, c) = (29.0f64, -36.0f64, 7.0f64);
    let disc = (b * b - 4.0 * a * c).sqrt();
    ((-b - disc) / (2.0 * a), (-b + disc) / (2.0 * a))
}

/// Side of a Lambert quadrilateral opposite `mn`, with leg `nz`:
/// `asinh(sinh mn * cosh nz)`.
pub fn lambert_side(mn: f64, nz: f64) -> f64 {
    (mn.sinh() * nz.cosh()).asinh()
}

/// Regular triangle with side `2x` centered at the origin, first vertex on
/// the positive second axis, counter-clockwise.
pub fn make_regular_triangle(x: f64) -> Result<Polytope> {
    check_positive("x", x)?;
    let s = triangle_circumradius(x).sinh();
    let pts = (0..3)
        .map(|k| {
            let a = FRAC_PI_2 + TAU * k as f64 / 3.0;
            HPoint::from_spatial(&[s * a.cos(), s * a.sin()])
        })
        .collect::<Result<Vec<_>>>()?;
    Polytope::new(pts)
}

/// The line through vertices 1 and 2 of a triangle, oriented toward vertex 0.
pub fn triangle_side_line(t: &Polytope) -> Result<Hyperplane> {
    let v = t.vertices();
    Ok(Hyperplane::through_points(&[v[1].clone(), v[2].clone()])?.oriented_toward(&v[0]))
}

/// Regular tetrahedron with edge `2x` centered at the origin.
pub fn make_regular_tetrahedron(x: f64) -> Result<Polytope> {
    check_positive("x", x)?;
    let s = tetrahedron_circumradius(x).sinh() / 3f64.sqrt();
    let dirs = [
        [1.0, 1.0, 1.0],
        [1.0, -1.0, -1.0],
        [-1.0, 1.0, -1.0],
        [-1.0, -1.0, 1.0],
    ];
    let pts = dirs
        .iter()
        .map(|d| HPoint::from_spatial(&[s * d[0], s * d[1], s * d[2]]))
        .collect::<Result<Vec<_>>>()?;
    Polytope::new(pts)
}

/// The plane of the facet opposite vertex 0, oriented toward vertex 0.
pub fn tetrahedron_facet_plane(t: &Polytope) -> Result<Hyperplane> {
    let v = t.vertices();
    Ok(Hyperplane::through_points(&v[1..4])?.oriented_toward(&v[0]))
}

/// The plane through edge `v0 v1` orthogonal to the segment joining the
/// midpoints of `v0 v1` and `v2 v3`, oriented toward `v2 v3`.
pub fn tetrahedron_edge_plane(t: &Polytope) -> Result<Hyperplane> {
    let v = t.vertices();
    let m = v[0].midpoint(&v[1]);
    let n = v[2].midpoint(&v[3]);
    Ok(Hyperplane::orthogonal_at(&UnitTangent::toward(&m, &n)?))
}

/// A single ball.
pub fn make_ball(center: HPoint, rho: f64) -> Result<BallIntersection> {
    BallIntersection::ball(center, rho)
}

/// The part of the ball of radius `rho` about the origin cut off by the `d`
/// coordinate hyperplanes: hull of the center, the axis points at distance
/// `rho` and about `n` points of the spherical cap in the positive orthant.
pub fn make_ball_orthant(rho: f64, dim: usize, n: usize) -> Result<Polytope> {
    check_positive("rho", rho)?;
    let s = rho.sinh();
    let mut dirs: Vec<Vec<f64>> = Vec::new();
    match dim {
        2 => {
            let n = n.max(2);
            for k in 0..n {
                let a = FRAC_PI_2 * k as f64 / (n - 1) as f64;
                dirs.push(vec![a.cos(), a.sin()]);
            }
        }
        3 => {
            let mut m = 1;
            while (m + 1) * (m + 2) / 2 < n {
                m += 1;
            }
            for i in 0..=m {
                for j in 0..=(m - i) {
                    let k = m - i - j;
                    let v = [i as f64, j as f64, k as f64];
                    let r = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
                    dirs.push(v.iter().map(|c| c / r).collect());
                }
            }
        }
        d => {
            return Err(GeometryError::Unsupported(format!("ball orthant in dimension {d}")));
        }
    }
    let mut pts = vec![HPoint::origin(dim)];
    for d in dirs {
        let x: Vec<f64> = d.iter().map(|c| c * s).collect();
        pts.push(HPoint::from_spatial(&x)?);
    }
    Polytope::new(pts)
}

/// Radius of the circle carrying a regular Reuleaux `k`-gon of width `delta`.
pub fn reuleaux_circumradius(k: usize, delta: f64) -> f64 {
    let phi = PI * (k as f64 - 1.0) / k as f64;
    ((delta.cosh() - 1.0) / (1.0 - phi.cos())).sqrt().asinh()
}

/// Regular Reuleaux `k`-gon of width `delta` centered at the origin, first
/// vertex on the positive second axis.
pub fn make_reuleaux(k: usize, delta: f64) -> Result<BallIntersection> {
    check_positive("delta", delta)?;
    if k < 3 || k.is_multiple_of(2) {
        return Err(GeometryError::InvalidParameter(format!(
            "Reuleaux polygons need an odd k >= 3, got {k}"
        )));
    }
    let s = reuleaux_circumradius(k, delta).sinh();
    let pts = (0..k)
        .map(|i| {
            let a = FRAC_PI_2 + TAU * i as f64 / k as f64;
            HPoint::from_spatial(&[s * a.cos(), s * a.sin()])
        })
        .collect::<Result<Vec<_>>>()?;
    BallIntersection::new(pts, delta)
}

/// A planar body whose thickness hyperplane `h` meets it in the single point
/// `a` although the farthest points form an arc of the equidistant curve.
#[derive(Clone, Debug)]
pub struct EquidistantArcBody {
    pub body: Polytope,
    /// The line `x_2 = 0`, body on its nonnegative side.
    pub h: Hyperplane,
    /// The origin, the only point of the body on `h`.
    pub a: HPoint,
    /// Samples of the equidistant arc at distance `rho` from `h`, in order.
    pub arc: Vec<HPoint>,
    /// Index into `arc` of the point above `a`.
    pub midpoint: usize,
    pub rho: f64,
}

/// Hull of the origin and an arc of the curve at distance `rho` above the
/// line `x_2 = 0`; the arc endpoints `b`, `c` are seen from the origin under
/// the angle `2 theta`, which must be at least a right angle. The arc gets
/// `n` steps, rounded up to even so that its midpoint is a sample.
pub fn make_example1(rho: f64, theta: f64, n: usize) -> Result<EquidistantArcBody> {
    check_positive("rho", rho)?;
    if !(FRAC_PI_4..FRAC_PI_2).contains(&theta) {
        return Err(GeometryError::AngleCondition(2.0 * theta));
    }
    let steps = n.max(2).div_ceil(2) * 2;
    let s_max = (rho.tanh() * theta.tan()).asinh();
    let (ch, sh) = (rho.cosh(), rho.sinh());
    let arc = (0..=steps)
        .map(|k| {
            let s = s_max * (2.0 * k as f64 / steps as f64 - 1.0);
            HPoint::from_timelike_unchecked(LorentzVector::from_vec_unchecked(vec![
                ch * s.sinh(),
                sh,
                ch * s.cosh(),
            ]))
        })
        .collect::<Vec<_>>();
    let a = HPoint::origin(2);
    let mut pts = vec![a.clone()];
    pts.extend(arc.iter().cloned());
    let body = Polytope::new(pts)?;
    if body.len() != steps + 2 {
        return Err(GeometryError::Degenerate("arc samples are not extreme".into()));
    }
    Ok(EquidistantArcBody {
        body,
        h: Hyperplane::new(LorentzVector::basis(2, 1))?,
        a,
        arc,
        midpoint: steps / 2,
        rho,
    })
}

/// Angle at `a` between the rays toward `b` and `c`.
pub fn angle_at(a: &HPoint, b: &HPoint, c: &HPoint) -> Result<f64> {
    let u = UnitTangent::toward(a, b)?;
    let v = UnitTangent::toward(a, c)?;
    Ok(u.vector().dot(v.vector()).clamp(-1.0, 1.0).acos())
}

/// A random polytope: `count` points with spatial coordinates uniform in
/// `[-1.5, 1.5]^d`, redrawn until they have nonempty interior.
pub fn random_polytope<R: Rng + ?Sized>(rng: &mut R, dim: usize, count: usize) -> Result<Polytope> {
    if count < dim + 1 {
        return Err(GeometryError::InvalidParameter(format!(
            "need at least {} points in dimension {dim}",
            dim + 1
        )));
    }
    loop {
        let pts = (0..count)
            .map(|_| {
                let x: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.5..1.5)).collect();
                HPoint::from_spatial(&x)
            })
            .collect::<Result<Vec<_>>>()?;
        if let Ok(p) = Polytope::new(pts) {
            return Ok(p);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        assert!((triangle_height(1.0) - 1.539_380_182_506_816_4).abs() < 1e-13);
        assert!((triangle_circumradius(1.0) - 1.112_735_304_613_053_9).abs() < 1e-13);
        assert!((simplex_facet_width(1.0) - 1.441_537_686_318_296_9).abs() < 1e-13);
        assert!((simplex_edge_width(1.0) - 1.392_237_338_901_981_1).abs() < 1e-13);
    }

    #[test]
    fn pythagoras_for_the_height() {
        for x in [0.3f64, 1.0, 2.5] {
            let lhs = (2.0 * x).cosh();
            let rhs = x.cosh() * triangle_height(x).cosh();
            assert!((lhs - rhs).abs() < 1e-12 * lhs);
        }
    }

    #[test]
    fn polynomial_roots() {
        let (a, b) = remark2_roots();
        assert!((a - 7.0 / 29.0).abs() < 1e-12 && (b - 1.0).abs() < 1e-12);
        assert_eq!(remark2_polynomial(1.0), 0.0);
    }

    #[test]
    fn triangle_and_tetrahedron_edges() {
        let t = make_regular_triangle(0.7).unwrap();
        let v = t.vertices();
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            assert!((v[i].distance(&v[j]) - 1.4).abs() < 1e-10);
        }
        let s = make_regular_tetrahedron(1.0).unwrap();
        let v = s.vertices();
        for i in 0..4 {
            for j in i + 1..4 {
                assert!((v[i].distance(&v[j]) - 2.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn reuleaux_opposite_vertices_at_width() {
        for k in [3, 5, 7] {
            let r = make_reuleaux(k, 1.0).unwrap();
            let c = r.centers();
            for i in 0..k {
                let j = (i + (k - 1) / 2) % k;
                assert!((c[i].distance(&c[j]) - 1.0).abs() < 1e-12);
            }
        }
        assert!(make_reuleaux(4, 1.0).is_err());
    }

    #[test]
    fn equidistant_arc_body_shape() {
        let e = make_example1(1.0, PI / 3.0, 200).unwrap();
        for p in &e.arc {
            assert!((e.h.signed_distance(p) - 1.0).abs() < 1e-12);
        }
        let ang = angle_at(&e.a, &e.arc[0], e.arc.last().unwrap()).unwrap();
        assert!((ang - 2.0 * PI / 3.0).abs() < 1e-12);
        assert!(e.arc[e.midpoint].vector()[0].abs() < 1e-15);
        assert!(make_example1(1.0, 0.7, 10).is_err());
    }

    #[test]
    fn orthant_contains_axis_points() {
        let q = make_ball_orthant(1.0, 3, 300).unwrap();
        assert!(q.len() >= 300);
        let o = HPoint::origin(3);
        assert!(q.vertices().iter().any(|v| v.distance(&o) < 1e-15));
    }
}
