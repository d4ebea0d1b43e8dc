use crate::body::{farthest_from_hyperplane, pencil_support, Polytope, Side};
use crate::error::{GeometryError, Result};
use crate::lorentz::{HPoint, Hyperplane, UnitTangent};
use crate::EPS_CONTACT;

/// Width of a body determined by a supporting hyperplane.
#[derive(Clone, Debug)]
pub struct WidthReport {
    pub value: f64,
    pub hyperplane: Hyperplane,
    /// A vertex farthest from `hyperplane` (lowest index on ties).
    pub far_point: HPoint,
    pub far_index: usize,
    /// Hyperplane through `far_point` orthogonal to its perpendicular onto
    /// `hyperplane`; it supports the body at `far_point`.
    pub far_hyperplane: Hyperplane,
}

impl WidthReport {
    /// Foot of the perpendicular from `far_point` onto `hyperplane`.
    pub fn foot(&self) -> HPoint {
        self.hyperplane.project(&self.far_point)
    }
}

/// Width of `c` determined by the supporting hyperplane `h` (body on the
/// nonnegative side).
pub fn width_h(c: &Polytope, h: &Hyperplane) -> Result<WidthReport> {
    let min = c
        .vertices()
        .iter()
        .map(|v| h.signed_distance(v))
        .fold(f64::INFINITY, f64::min);
    if min < -EPS_CONTACT {
        return Err(GeometryError::HyperplaneCutsBody(min));
    }
    if min > EPS_CONTACT {
        return Err(GeometryError::NotSupporting(min));
    }
    let far = farthest_from_hyperplane(c, h)?;
    let foot = h.project(&far.point);
    let far_hyperplane = Hyperplane::orthogonal_at(&UnitTangent::toward(&far.point, &foot)?);
    Ok(WidthReport {
        value: far.distance,
        hyperplane: h.clone(),
        far_point: far.point,
        far_index: far.index,
        far_hyperplane,
    })
}

/// Width determined by one of the two supporting hyperplanes orthogonal to
/// the geodesic `dir`.
pub fn width_in_direction(c: &Polytope, dir: &UnitTangent, side: Side) -> Result<WidthReport> {
    let s = pencil_support(c, dir)?;
    width_h(c, s.hyperplane(side))
}

/// Both pencil widths along `dir` in one pass over the vertices; `dir` is
/// assumed to start inside the body.
pub(crate) fn pencil_widths(c: &Polytope, dir: &UnitTangent) -> (f64, f64) {
    let b = dir.base().vector();
    let u = dir.vector();
    let mut tmin = f64::INFINITY;
    let mut tmax = f64::NEG_INFINITY;
    let mut prods = Vec::with_capacity(c.len());
    for v in c.vertices() {
        let beta = b.dot(v.vector());
        let alpha = u.dot(v.vector());
        let t = 0.5 * ((alpha - beta) / (-beta - alpha)).ln();
        tmin = tmin.min(t);
        tmax = tmax.max(t);
        prods.push((beta, alpha));
    }
    let (sm, cm) = (tmin.sinh(), tmin.cosh());
    let (sp, cp) = (tmax.sinh(), tmax.cosh());
    let mut wm = f64::NEG_INFINITY;
    let mut wp = f64::NEG_INFINITY;
    for &(beta, alpha) in &prods {
        wm = wm.max(sm * beta + cm * alpha);
        wp = wp.max(-(sp * beta + cp * alpha));
    }
    (wm.asinh(), wp.asinh())
}

/// Diameter with an attaining vertex pair.
#[derive(Clone, Debug)]
pub struct DiameterReport {
    pub value: f64,
    pub a: HPoint,
    pub b: HPoint,
    pub indices: (usize, usize),
}

/// Largest distance between two vertices (lowest index pair on ties).
pub fn diameter(c: &Polytope) -> DiameterReport {
    let v = c.vertices();
    let mut best = (0, 1, f64::NEG_INFINITY);
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let d = v[i].distance(&v[j]);
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    DiameterReport {
        value: best.2,
        a: v[best.0].clone(),
        b: v[best.1].clone(),
        indices: (best.0, best.1),
    }
}

/// Largest distance between any pair of points, for loose point sets.
pub fn point_set_diameter(points: &[HPoint]) -> f64 {
    let mut best: f64 = 0.0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            best = best.max(points[i].distance(&points[j]));
        }
    }
    best
}
