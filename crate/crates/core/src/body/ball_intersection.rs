use std::f64::consts::TAU;

use crate::body::Polytope;
use crate::directions::{direction_grid, grid_spacing};
use crate::error::{GeometryError, Result};
use crate::lorentz::{geodesic_point, HPoint, Isometry, LorentzVector, TangentFrame, UnitTangent};

/// Intersection of closed balls of a common radius.
#[derive(Clone, Debug)]
pub struct BallIntersection {
    centers: Vec<HPoint>,
    radius: f64,
}

/// A polytope inscribed in a ball intersection, with an upper bound on the
/// Hausdorff distance between the two.
#[derive(Clone, Debug)]
pub struct Discretization {
    pub polytope: Polytope,
    pub hausdorff_bound: f64,
}

impl BallIntersection {
    pub fn new(centers: Vec<HPoint>, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(GeometryError::InvalidParameter(format!(
                "radius must be positive, got {radius}"
            )));
        }
        let Some(first) = centers.first() else {
            return Err(GeometryError::EmptyIntersection);
        };
        let d = first.dim();
        for c in &centers {
            if c.dim() != d {
                return Err(GeometryError::DimensionMismatch {
                    expected: d,
                    found: c.dim(),
                });
            }
        }
        for (i, a) in centers.iter().enumerate() {
            for b in &centers[i + 1..] {
                if a.distance(b) > 2.0 * radius * (1.0 + 1e-12) {
                    return Err(GeometryError::EmptyIntersection);
                }
            }
        }
        Ok(Self { centers, radius })
    }

    /// A single ball.
    pub fn ball(center: HPoint, radius: f64) -> Result<Self> {
        Self::new(vec![center], radius)
    }

    pub fn centers(&self) -> &[HPoint] {
        &self.centers
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn dim(&self) -> usize {
        self.centers[0].dim()
    }

    pub fn contains(&self, p: &HPoint) -> bool {
        let tol = 1e-9 * (1.0 + self.radius);
        self.centers.iter().all(|c| c.distance(p) <= self.radius + tol)
    }

    pub fn transformed(&self, g: &Isometry) -> Self {
        Self {
            centers: self.centers.iter().map(|c| g.apply_point(c)).collect(),
            radius: self.radius,
        }
    }

    /// A point at distance `< radius` from every center: the centers' mean if
    /// it qualifies, otherwise an approximate minimax center.
    pub fn interior_point(&self) -> Result<HPoint> {
        let d = self.dim();
        let margin = 1e-9 * (1.0 + self.radius);
        let far = |p: &HPoint| -> (usize, f64) {
            let mut best = (0, f64::NEG_INFINITY);
            for (i, c) in self.centers.iter().enumerate() {
                let r = p.distance(c);
                if r > best.1 {
                    best = (i, r);
                }
            }
            best
        };
        let mut w = LorentzVector::zeros(d);
        for c in &self.centers {
            w = &w + c.vector();
        }
        let mut p = HPoint::from_timelike_unchecked(w);
        let (_, r0) = far(&p);
        if r0 < self.radius - margin {
            return Ok(p);
        }
        let mut best = (p.clone(), r0);
        for k in 1..=4000 {
            let (i, r) = far(&p);
            if r < best.1 {
                best = (p.clone(), r);
            }
            if r <= 0.0 {
                break;
            }
            let Ok(dir) = UnitTangent::toward(&p, &self.centers[i]) else {
                break;
            };
            p = geodesic_point(&dir, r / (k as f64 + 1.0));
        }
        if best.1 < self.radius - margin {
            Ok(best.0)
        } else {
            Err(GeometryError::EmptyIntersection)
        }
    }

    /// Distance along `dir` from its base (inside the body) to the boundary.
    pub fn ray_exit(&self, dir: &UnitTangent) -> f64 {
        let ch = self.radius.cosh();
        let mut best = f64::INFINITY;
        for c in &self.centers {
            // -<c, g(t)> = a cosh t + b sinh t = r cosh(t + phi)
            let a = -c.vector().dot(dir.base().vector());
            let b = -c.vector().dot(dir.vector());
            let r = ((a - b) * (a + b)).max(1e-300).sqrt();
            let phi = (b / a).clamp(-1.0, 1.0).atanh();
            let t = (ch / r).max(1.0).acosh() - phi;
            best = best.min(t);
        }
        best.max(0.0)
    }

    /// `n` boundary points along a direction grid from an interior point.
    pub fn boundary_sample(&self, n: usize) -> Result<Vec<HPoint>> {
        let base = self.interior_point()?;
        let frame = TangentFrame::canonical(&base);
        let grid = direction_grid(self.dim(), n.max(1))?;
        Ok(grid
            .iter()
            .map(|a| {
                let dir = frame.direction(a).expect("frame matches dimension");
                geodesic_point(&dir, self.ray_exit(&dir))
            })
            .collect())
    }

    /// Inscribed polytope with vertices on the boundary. In the plane every
    /// boundary arc gets `n` equal steps; in space `n` rays are cast.
    pub fn discretize(&self, n: usize) -> Result<Discretization> {
        if n < 3 {
            return Err(GeometryError::InvalidParameter("discretize needs n >= 3".into()));
        }
        match self.dim() {
            2 => self.discretize_planar(n),
            3 => self.discretize_rays(n),
            d => Err(GeometryError::Unsupported(format!("discretize in dimension {d}"))),
        }
    }

    fn distinct_centers(&self) -> Vec<HPoint> {
        let mut out: Vec<HPoint> = Vec::new();
        for c in &self.centers {
            if out.iter().all(|o| o.distance(c) > 1e-12) {
                out.push(c.clone());
            }
        }
        out
    }

    fn discretize_planar(&self, n: usize) -> Result<Discretization> {
        let centers = self.distinct_centers();
        let (ch, sh) = (self.radius.cosh(), self.radius.sinh());
        let coth = ch / sh;
        let mut points = Vec::new();
        let mut corners: Vec<HPoint> = Vec::new();
        let mut step: f64 = 0.0;
        for (i, ci) in centers.iter().enumerate() {
            let frame = TangentFrame::canonical(ci);
            let (e1, e2) = (&frame.basis()[0], &frame.basis()[1]);
            let mut allowed = ArcSet::full();
            for (j, cj) in centers.iter().enumerate() {
                if i == j {
                    continue;
                }
                let a = -cj.vector().dot(ci.vector());
                let b = -cj.vector().dot(e1);
                let c = -cj.vector().dot(e2);
                let k = coth * (1.0 - a);
                let r = b.hypot(c);
                if k >= r {
                    continue;
                }
                if k <= -r {
                    allowed = ArcSet::empty();
                    break;
                }
                let alpha = (k / r).acos();
                let phi = c.atan2(b);
                allowed.intersect(phi + alpha, TAU - 2.0 * alpha);
            }
            let point = |theta: f64| {
                let dir = e1.scaled(theta.cos()).add_scaled(theta.sin(), e2);
                HPoint::from_timelike_unchecked(LorentzVector::combine(ch, ci.vector(), sh, &dir))
            };
            if allowed.is_full() {
                for k in 0..n {
                    points.push(point(TAU * k as f64 / n as f64));
                }
                step = step.max(TAU / n as f64);
                continue;
            }
            for (s, e) in allowed.arcs() {
                let len = e - s;
                for k in 0..=n {
                    let p = point(s + len * k as f64 / n as f64);
                    // Neighbouring arcs meet at corners; keep one copy.
                    if k == 0 || k == n {
                        if corners.iter().any(|c: &HPoint| c.distance(&p) < 1e-9) {
                            continue;
                        }
                        corners.push(p.clone());
                    }
                    points.push(p);
                }
                step = step.max(len / n as f64);
            }
        }
        if points.len() < 3 {
            return Err(GeometryError::EmptyIntersection);
        }
        let polytope = Polytope::new(points)?;
        Ok(Discretization {
            polytope,
            hausdorff_bound: chord_sag(self.radius, step),
        })
    }

    fn discretize_rays(&self, n: usize) -> Result<Discretization> {
        let base = self.interior_point()?;
        let frame = TangentFrame::canonical(&base);
        let grid = direction_grid(3, n)?;
        let mut reach: f64 = 0.0;
        let points: Vec<HPoint> = grid
            .iter()
            .map(|a| {
                let dir = frame.direction(a).expect("frame matches dimension");
                let t = self.ray_exit(&dir);
                reach = reach.max(t);
                geodesic_point(&dir, t)
            })
            .collect();
        let spacing = grid_spacing(3, n);
        let bound = if self.distinct_centers().len() == 1 {
            chord_sag(self.radius, 2.0 * spacing)
        } else {
            // Heuristic: spacing of the ray hits on the farthest part of the boundary.
            2.0 * (reach.sinh() * (spacing / 2.0).sin()).asinh()
        };
        Ok(Discretization {
            polytope: Polytope::new(points)?,
            hausdorff_bound: bound,
        })
    }
}

/// Free-function form of [`BallIntersection::discretize`].
pub fn discretize(b: &BallIntersection, n: usize) -> Result<Discretization> {
    b.discretize(n)
}

/// Largest distance between a circular arc of radius `r` spanning the
/// central angle `step` and its chord.
pub fn chord_sag(r: f64, step: f64) -> f64 {
    let s = r.sinh() * (step / 2.0).sin();
    let inner = (r.cosh() / (1.0 + s * s).sqrt()).max(1.0).acosh();
    (r - inner).max(0.0)
}

/// Finite union of disjoint closed arcs of the circle, angles in `[0, 2pi)`
/// unrolled as intervals.
#[derive(Clone, Debug)]
struct ArcSet {
    intervals: Vec<(f64, f64)>,
    full: bool,
}

impl ArcSet {
    fn full() -> Self {
        Self {
            intervals: vec![(0.0, TAU)],
            full: true,
        }
    }

    fn empty() -> Self {
        Self {
            intervals: Vec::new(),
            full: false,
        }
    }

    fn is_full(&self) -> bool {
        self.full
    }

    /// Intersects with the arc starting at `start` of length `len`.
    fn intersect(&mut self, start: f64, len: f64) {
        self.full = false;
        let s = start.rem_euclid(TAU);
        let e = s + len;
        let mut pieces = vec![(s, e.min(TAU))];
        if e > TAU {
            pieces.push((0.0, e - TAU));
        }
        let mut out = Vec::new();
        for &(a, b) in &self.intervals {
            for &(c, d) in &pieces {
                let lo = a.max(c);
                let hi = b.min(d);
                if hi >= lo {
                    out.push((lo, hi));
                }
            }
        }
        out.sort_by(|x, y| x.0.total_cmp(&y.0));
        self.intervals = out;
    }

    /// Arcs as `(start, end)` with `end >= start`; a piece ending at `2pi` is
    /// joined with one starting at `0`.
    fn arcs(&self) -> Vec<(f64, f64)> {
        let mut v = self.intervals.clone();
        if v.len() >= 2 {
            let first = v[0];
            let last = *v.last().expect("nonempty");
            if first.0 <= 1e-15 && last.1 >= TAU - 1e-15 {
                v.pop();
                v[0] = (last.0, first.1 + TAU);
            }
        }
        v
    }
}
