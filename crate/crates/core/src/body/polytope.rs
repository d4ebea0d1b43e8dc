use nalgebra::DMatrix;

use crate::body::hull::{HullProjection, KleinHull};
use crate::directions::direction_grid;
use crate::error::{GeometryError, Result};
use crate::lorentz::{
    from_klein, geodesic_point, to_klein, HPoint, Isometry, LorentzVector, TangentFrame,
    UnitTangent,
};
use crate::EPS_HULL;

/// A convex body given as the hyperbolic convex hull of finitely many points.
///
/// Construction drops points lying in the hull of the others, so every stored
/// vertex is an extreme point. Survivors keep their input order.
#[derive(Clone, Debug)]
pub struct Polytope {
    vertices: Vec<HPoint>,
    klein: Vec<Vec<f64>>,
    hull: KleinHull,
    reference: HPoint,
}

impl Polytope {
    pub fn new(points: Vec<HPoint>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(GeometryError::Degenerate("no vertices".into()));
        };
        let d = first.dim();
        for p in &points {
            if p.dim() != d {
                return Err(GeometryError::DimensionMismatch {
                    expected: d,
                    found: p.dim(),
                });
            }
        }
        if points.len() < d + 1 {
            return Err(GeometryError::Degenerate(format!(
                "need at least {} vertices in dimension {d}, got {}",
                d + 1,
                points.len()
            )));
        }
        check_full_rank(&points)?;
        let klein: Vec<Vec<f64>> = points.iter().map(to_klein).collect();
        let keep = if d == 2 {
            planar_extreme(&klein)
        } else {
            prune_interior(&klein)
        };
        let vertices: Vec<HPoint> = keep.iter().map(|&i| points[i].clone()).collect();
        if vertices.len() < d + 1 {
            return Err(GeometryError::Degenerate("hull has empty interior".into()));
        }
        Ok(Self::assemble(vertices))
    }

    /// Builds a polytope from Klein coordinates.
    pub fn from_klein(points: &[Vec<f64>]) -> Result<Self> {
        let pts = points
            .iter()
            .map(|y| from_klein(y))
            .collect::<Result<Vec<_>>>()?;
        Self::new(pts)
    }

    fn assemble(vertices: Vec<HPoint>) -> Self {
        let klein: Vec<Vec<f64>> = vertices.iter().map(to_klein).collect();
        let hull = KleinHull::new(&klein);
        let d = vertices[0].dim();
        let mut w = LorentzVector::zeros(d);
        for v in &vertices {
            w = &w + v.vector();
        }
        let reference = HPoint::from_timelike_unchecked(w);
        Self {
            vertices,
            klein,
            hull,
            reference,
        }
    }

    pub fn dim(&self) -> usize {
        self.reference.dim()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[HPoint] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &HPoint {
        &self.vertices[i]
    }

    /// Klein coordinates of the vertices.
    pub fn klein_vertices(&self) -> &[Vec<f64>] {
        &self.klein
    }

    /// Normalized Minkowski mean of the vertices; an interior point.
    pub fn interior_reference(&self) -> &HPoint {
        &self.reference
    }

    /// Tangent frame at the reference point built from the vertex directions.
    /// It moves with the body under isometries, so direction grids expressed
    /// in it are equivariant.
    pub fn intrinsic_frame(&self) -> TangentFrame {
        TangentFrame::from_targets(&self.reference, &self.vertices)
            .expect("vertices of a full-dimensional polytope span every direction")
    }

    pub fn contains(&self, p: &HPoint) -> bool {
        self.hull.membership_residual(&to_klein(p), None) <= EPS_HULL
    }

    pub(crate) fn project_klein(&self, p: &HPoint) -> HullProjection {
        self.hull.project(&to_klein(p), None)
    }

    /// Nearest hull point in the Klein picture, lifted back to the sheet.
    /// Its distance to `p` bounds the hyperbolic distance to the body from above.
    pub fn nearest_point_bound(&self, p: &HPoint) -> (HPoint, f64) {
        if self.contains(p) {
            return (p.clone(), 0.0);
        }
        let proj = self.project_klein(p);
        let q = from_klein(&proj.nearest).expect("hull points are interior to the Klein ball");
        let d = p.distance(&q);
        (q, d)
    }

    /// Image under an isometry; vertex order is kept.
    pub fn transformed(&self, g: &Isometry) -> Self {
        Self::assemble(self.vertices.iter().map(|v| g.apply_point(v)).collect())
    }

    /// Vertex indices in counter-clockwise order around the reference (d = 2).
    pub fn boundary_cycle(&self) -> Result<Vec<usize>> {
        if self.dim() != 2 {
            return Err(GeometryError::Unsupported("boundary cycle needs d = 2".into()));
        }
        let c = to_klein(&self.reference);
        let mut idx: Vec<usize> = (0..self.len()).collect();
        let ang: Vec<f64> = self
            .klein
            .iter()
            .map(|y| (y[1] - c[1]).atan2(y[0] - c[0]))
            .collect();
        idx.sort_by(|&a, &b| ang[a].total_cmp(&ang[b]));
        Ok(idx)
    }

    /// Point where the geodesic ray `dir` leaves the body; `dir` must start
    /// inside.
    pub fn ray_exit(&self, dir: &UnitTangent) -> HPoint {
        if self.dim() == 2 {
            if let Some(p) = self.planar_ray_exit(dir) {
                return p;
            }
        }
        let reach = self
            .vertices
            .iter()
            .map(|v| v.distance(dir.base()))
            .fold(0.0, f64::max)
            + 1.0;
        let (mut lo, mut hi) = (0.0, reach);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if self.contains(&geodesic_point(dir, mid)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        geodesic_point(dir, lo)
    }

    fn planar_ray_exit(&self, dir: &UnitTangent) -> Option<HPoint> {
        let y0 = to_klein(dir.base());
        let y1 = to_klein(&geodesic_point(dir, 1.0));
        let w = [y1[0] - y0[0], y1[1] - y0[1]];
        let cycle = self.boundary_cycle().ok()?;
        let n = cycle.len();
        let mut best = f64::INFINITY;
        for k in 0..n {
            let a = &self.klein[cycle[k]];
            let b = &self.klein[cycle[(k + 1) % n]];
            let e = [b[0] - a[0], b[1] - a[1]];
            let det = w[0] * (-e[1]) - w[1] * (-e[0]);
            if det.abs() < 1e-300 {
                continue;
            }
            let r = [a[0] - y0[0], a[1] - y0[1]];
            let s = (r[0] * (-e[1]) - r[1] * (-e[0])) / det;
            let mu = (w[0] * r[1] - w[1] * r[0]) / det;
            if s > 0.0 && (-1e-12..=1.0 + 1e-12).contains(&mu) && s < best {
                best = s;
            }
        }
        if !best.is_finite() {
            return None;
        }
        let y = [y0[0] + best * w[0], y0[1] + best * w[1]];
        from_klein(&y).ok()
    }

    /// `n` boundary points hit by rays from the reference point along a
    /// direction grid in the intrinsic frame.
    pub fn boundary_sample(&self, n: usize) -> Vec<HPoint> {
        let frame = self.intrinsic_frame();
        let grid = direction_grid(self.dim(), n.max(1)).unwrap_or_else(|_| {
            // Higher dimensions: random-free fallback along frame axes.
            (0..n.max(1))
                .map(|k| {
                    let mut v = vec![0.0; self.dim()];
                    v[k % self.dim()] = if (k / self.dim()).is_multiple_of(2) { 1.0 } else { -1.0 };
                    v
                })
                .collect()
        });
        grid.iter()
            .map(|a| self.ray_exit(&frame.direction(a).expect("frame matches dimension")))
            .collect()
    }
}

/// Free-function form of [`Polytope::contains`].
pub fn hull_contains(p: &Polytope, q: &HPoint) -> bool {
    p.contains(q)
}

/// Free-function form of [`Polytope::interior_reference`].
pub fn interior_reference(p: &Polytope) -> HPoint {
    p.interior_reference().clone()
}

/// Free-function form of [`Polytope::boundary_sample`].
pub fn boundary_sample(p: &Polytope, n: usize) -> Vec<HPoint> {
    p.boundary_sample(n)
}

fn check_full_rank(points: &[HPoint]) -> Result<()> {
    let rows = points[0].dim() + 1;
    let m = DMatrix::<f64>::from_fn(rows, points.len().max(rows), |i, j| {
        points.get(j).map_or(0.0, |p| p.coords()[i])
    });
    let sv = m.singular_values();
    let max = sv.max();
    let min = sv.iter().take(rows).cloned().fold(f64::INFINITY, f64::min);
    if !(min > 1e-10 * max) {
        return Err(GeometryError::Degenerate(
            "vertices lie in a hyperplane (empty interior)".into(),
        ));
    }
    Ok(())
}

/// Indices of the strictly extreme points of a planar point set, in input order.
fn planar_extreme(pts: &[Vec<f64>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| {
        pts[a][0]
            .total_cmp(&pts[b][0])
            .then(pts[a][1].total_cmp(&pts[b][1]))
            .then(a.cmp(&b))
    });
    let turn = |o: usize, a: usize, b: usize| {
        let (ox, oy) = (pts[o][0], pts[o][1]);
        let (ax, ay) = (pts[a][0] - ox, pts[a][1] - oy);
        let (bx, by) = (pts[b][0] - ox, pts[b][1] - oy);
        let cross = ax * by - ay * bx;
        let scale = (ax.hypot(ay) * bx.hypot(by)).max(1e-300);
        cross > 1e-12 * scale
    };
    let mut hull: Vec<usize> = Vec::with_capacity(2 * pts.len());
    for &i in &order {
        while hull.len() >= 2 && !turn(hull[hull.len() - 2], hull[hull.len() - 1], i) {
            hull.pop();
        }
        hull.push(i);
    }
    let lower = hull.len() + 1;
    for &i in order.iter().rev().skip(1) {
        while hull.len() >= lower && !turn(hull[hull.len() - 2], hull[hull.len() - 1], i) {
            hull.pop();
        }
        hull.push(i);
    }
    hull.pop();
    hull.sort_unstable();
    hull.dedup();
    hull
}

/// Removes, in input order, every point lying in the hull of the remaining ones.
fn prune_interior(pts: &[Vec<f64>]) -> Vec<usize> {
    let mut alive = vec![true; pts.len()];
    for i in 0..pts.len() {
        let others: Vec<usize> = (0..pts.len()).filter(|&j| j != i && alive[j]).collect();
        let cols: Vec<Vec<f64>> = others.iter().map(|&j| pts[j].clone()).collect();
        if KleinHull::new(&cols).membership_residual(&pts[i], None) <= EPS_HULL {
            alive[i] = false;
        }
    }
    (0..pts.len()).filter(|&i| alive[i]).collect()
}
