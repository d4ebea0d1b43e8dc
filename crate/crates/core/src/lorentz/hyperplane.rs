use nalgebra::DMatrix;

use crate::error::{GeometryError, Result};
use crate::lorentz::{HPoint, LorentzVector, UnitTangent};
use crate::{EPS_CLASS, EPS_NORM};

/// A hyperplane `{p : <n,p> = 0}` given by a unit spacelike normal.
///
/// The sign of `n` carries an orientation: body operations expect the body
/// to lie in `<n,p> >= 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Hyperplane {
    n: LorentzVector,
}

/// Mutual position of two hyperplanes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperplaneRelation {
    Intersecting,
    BoundaryParallel,
    Ultraparallel,
}

impl Hyperplane {
    /// Normalizes a spacelike vector to a unit normal.
    pub fn new(n: LorentzVector) -> Result<Self> {
        let q = n.norm_sq();
        if !(q > 1e-24 * n.max_abs().max(1.0).powi(2)) {
            return Err(GeometryError::NotSpacelike(q));
        }
        Ok(Self {
            n: n.scaled(1.0 / q.sqrt()),
        })
    }

    /// The hyperplane through `dir.base()` orthogonal to the geodesic of `dir`,
    /// with normal `dir.vector()`.
    pub fn orthogonal_at(dir: &UnitTangent) -> Self {
        Self {
            n: dir.vector().clone(),
        }
    }

    /// Hyperplane through `d` points of H^d (unoriented; sign is arbitrary).
    pub fn through_points(points: &[HPoint]) -> Result<Self> {
        let d = points
            .first()
            .ok_or_else(|| GeometryError::InvalidParameter("no points".into()))?
            .dim();
        if points.len() != d {
            return Err(GeometryError::InvalidParameter(format!(
                "need exactly {d} points, got {}",
                points.len()
            )));
        }
        // <n,p> = n^T J p, so n spans the kernel of the rows (J p_i)^T.
        let mut m = DMatrix::<f64>::zeros(d + 1, d + 1);
        for (i, p) in points.iter().enumerate() {
            for j in 0..=d {
                let s = if j == d { -1.0 } else { 1.0 };
                m[(i, j)] = s * p.coords()[j];
            }
        }
        let svd = m.svd(false, true);
        let v_t = svd.v_t.expect("v_t requested");
        let sv = &svd.singular_values;
        let (imin, _) = sv
            .iter()
            .enumerate()
            .fold((0, f64::INFINITY), |acc, (i, &s)| if s < acc.1 { (i, s) } else { acc });
        let smax = sv.iter().cloned().fold(0.0, f64::max);
        let second = sv
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != imin)
            .map(|(_, &s)| s)
            .fold(f64::INFINITY, f64::min);
        if second < 1e-12 * smax {
            return Err(GeometryError::Degenerate(
                "points do not determine a unique hyperplane".into(),
            ));
        }
        let n: Vec<f64> = v_t.row(imin).iter().cloned().collect();
        Self::new(LorentzVector::from_vec_unchecked(n))
    }

    pub fn normal(&self) -> &LorentzVector {
        &self.n
    }

    pub fn dim(&self) -> usize {
        self.n.dim()
    }

    pub fn flipped(&self) -> Self {
        Self { n: -&self.n }
    }

    /// Same hyperplane, oriented so that `p` is on the nonnegative side.
    pub fn oriented_toward(&self, p: &HPoint) -> Self {
        if self.n.dot(p.vector()) < 0.0 {
            self.flipped()
        } else {
            self.clone()
        }
    }

    /// `arcsinh(<n,p>)`: positive on the oriented side.
    pub fn signed_distance(&self, p: &HPoint) -> f64 {
        self.n.dot(p.vector()).asinh()
    }

    /// Orthogonal projection (foot of the perpendicular) of `p` onto the hyperplane.
    pub fn project(&self, p: &HPoint) -> HPoint {
        let s = self.n.dot(p.vector());
        let v = p.vector().add_scaled(-s, &self.n);
        HPoint::from_timelike_unchecked(v)
    }

    pub fn contains(&self, p: &HPoint) -> bool {
        self.n.dot(p.vector()).abs() <= EPS_NORM * p.vector().time().max(1.0)
    }

    pub fn relation(&self, other: &Hyperplane) -> HyperplaneRelation {
        let c = self.n.dot(&other.n).abs();
        if c > 1.0 + EPS_CLASS {
            HyperplaneRelation::Ultraparallel
        } else if c >= 1.0 - EPS_CLASS {
            HyperplaneRelation::BoundaryParallel
        } else {
            HyperplaneRelation::Intersecting
        }
    }

    /// Angle between intersecting hyperplanes, in `[0, pi/2]`.
    pub fn angle_with(&self, other: &Hyperplane) -> Option<f64> {
        let c = self.n.dot(&other.n).abs();
        (c < 1.0).then(|| c.acos())
    }
}

pub fn signed_dist_ph(p: &HPoint, h: &Hyperplane) -> f64 {
    h.signed_distance(p)
}

pub fn project_ph(p: &HPoint, h: &Hyperplane) -> HPoint {
    h.project(p)
}

pub fn hyperplane_relation(h1: &Hyperplane, h2: &Hyperplane) -> HyperplaneRelation {
    h1.relation(h2)
}

/// Length of the common perpendicular of two ultraparallel hyperplanes.
pub fn dist_hh(h1: &Hyperplane, h2: &Hyperplane) -> Result<f64> {
    let c = h1.n.dot(&h2.n).abs();
    match h1.relation(h2) {
        HyperplaneRelation::Ultraparallel => Ok(c.acosh()),
        _ => Err(GeometryError::NotUltraparallel(c)),
    }
}

/// Member of the pencil of hyperplanes orthogonal to the geodesic of `dir`,
/// passing through `gamma(t)`. Raw orientation: `gamma(s)` for `s < t` lies on
/// the negative side.
pub fn pencil_hyperplane(dir: &UnitTangent, t: f64) -> Hyperplane {
    let n = dir.velocity_at(t);
    // Unit by construction; renormalize against rounding.
    let q = n.norm_sq();
    Hyperplane {
        n: n.scaled(1.0 / q.sqrt()),
    }
}

/// The parameter `t` with `p` on `pencil_hyperplane(dir, t)`.
pub fn pencil_param(dir: &UnitTangent, p: &HPoint) -> f64 {
    let a = dir.vector().dot(p.vector());
    let b = -dir.base().vector().dot(p.vector());
    // |a| < b on the sheet; 0.5 ln((b+a)/(b-a)) avoids dividing first.
    0.5 * ((b + a) / (b - a)).ln()
}

/// Region between `h` and the equidistant surface at distance `rho` on the
/// oriented side of `h`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquidistantStrip {
    pub h: Hyperplane,
    pub rho: f64,
}

impl EquidistantStrip {
    pub fn new(h: Hyperplane, rho: f64) -> Result<Self> {
        if !(rho >= 0.0) {
            return Err(GeometryError::InvalidParameter(format!(
                "strip width must be nonnegative, got {rho}"
            )));
        }
        Ok(Self { h, rho })
    }

    pub fn contains(&self, p: &HPoint) -> bool {
        in_strip(p, self)
    }
}

/// `0 <= <n,p> <= sinh(rho)` up to the normalization tolerance.
pub fn in_strip(p: &HPoint, strip: &EquidistantStrip) -> bool {
    let s = strip.h.normal().dot(p.vector());
    let tol = EPS_NORM * p.vector().time().max(1.0);
    s >= -tol && s <= strip.rho.sinh() + tol
}
