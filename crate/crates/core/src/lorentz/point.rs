use crate::error::{GeometryError, Result};
use crate::lorentz::LorentzVector;
use crate::EPS_NORM;

/// Tolerance used when accepting externally supplied coordinates as sheet points.
const INPUT_SHEET_TOL: f64 = 1e-6;

/// A point of H^d on the upper sheet `<p,p> = -1`, `p_{d+1} >= 1`.
#[derive(Clone, PartialEq)]
pub struct HPoint(LorentzVector);

impl HPoint {
    /// Accepts coordinates that lie on the upper sheet up to input noise and
    /// renormalizes them exactly onto it.
    pub fn new(v: LorentzVector) -> Result<Self> {
        let q = v.norm_sq();
        let scale = v.time().abs().max(1.0).powi(2);
        if v.time() <= 0.0 || (q + 1.0).abs() > INPUT_SHEET_TOL * scale {
            return Err(GeometryError::NotOnSheet(format!(
                "<p,p> = {q}, last coordinate {}",
                v.time()
            )));
        }
        Ok(Self::from_timelike_unchecked(v))
    }

    /// Radially projects a future-pointing timelike vector onto the sheet.
    pub fn from_timelike(v: LorentzVector) -> Result<Self> {
        let q = v.norm_sq();
        if !(q < 0.0) || v.time() <= 0.0 {
            return Err(GeometryError::NotOnSheet(format!(
                "vector is not future timelike (<v,v> = {q})"
            )));
        }
        Ok(Self::from_timelike_unchecked(v))
    }

    pub(crate) fn from_timelike_unchecked(v: LorentzVector) -> Self {
        let s = (-v.norm_sq()).sqrt();
        Self(v.scaled(1.0 / s))
    }

    /// The point with spatial coordinates `x`, i.e. `(x, sqrt(1 + |x|^2))`.
    pub fn from_spatial(x: &[f64]) -> Result<Self> {
        let t = (1.0 + x.iter().map(|c| c * c).sum::<f64>()).sqrt();
        let mut c = x.to_vec();
        c.push(t);
        Ok(Self(LorentzVector::new(c)?))
    }

    /// The base point `o = (0, ..., 0, 1)`.
    pub fn origin(dim: usize) -> Self {
        Self(LorentzVector::basis(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn vector(&self) -> &LorentzVector {
        &self.0
    }

    pub fn coords(&self) -> &[f64] {
        self.0.coords()
    }

    /// Hyperbolic distance. Coincident points give exactly zero.
    pub fn distance(&self, other: &HPoint) -> f64 {
        stable_distance(&self.0, &other.0)
    }

    /// Geodesic midpoint.
    pub fn midpoint(&self, other: &HPoint) -> HPoint {
        Self::from_timelike_unchecked(&self.0 + &other.0)
    }
}

impl std::fmt::Debug for HPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HPoint{:?}", self.0)
    }
}

// For nearby points arccosh(-<p,q>) loses half the digits; use
// 2 asinh(|p - q| / 2) with the Minkowski norm of the difference instead.
fn stable_distance(p: &LorentzVector, q: &LorentzVector) -> f64 {
    let c = -p.dot(q);
    if c < 2.0 {
        let diff = p - q;
        let s = diff.norm_sq().max(0.0).sqrt();
        2.0 * (0.5 * s).asinh()
    } else {
        c.acosh()
    }
}

/// Distance between two sheet points, reporting an error when the arccosh
/// argument falls below 1 by more than the normalization tolerance.
pub fn dist_pp(p: &HPoint, q: &HPoint) -> Result<f64> {
    if p.dim() != q.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    let c = -p.0.dot(&q.0);
    let scale = p.0.time().abs() * q.0.time().abs();
    if c < 1.0 - EPS_NORM * scale.max(1.0) {
        return Err(GeometryError::NotOnSheet(format!(
            "arccosh argument {c} below 1"
        )));
    }
    Ok(stable_distance(&p.0, &q.0))
}

/// A unit tangent vector `u` at `base`: `<u,u> = 1`, `<u,base> = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitTangent {
    base: HPoint,
    u: LorentzVector,
}

impl UnitTangent {
    /// Projects `w` onto the tangent space at `base` and normalizes it.
    pub fn new(base: HPoint, w: &LorentzVector) -> Result<Self> {
        if w.dim() != base.dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: base.dim(),
                found: w.dim(),
            });
        }
        let t = w.add_scaled(w.dot(base.vector()), base.vector());
        let n = t.norm_sq();
        if !(n > 1e-28 * w.max_abs().max(1.0).powi(2)) {
            return Err(GeometryError::NotTangent(
                "vector has no component tangent to the base point".into(),
            ));
        }
        let u = t.scaled(1.0 / n.sqrt());
        Ok(Self { base, u })
    }

    /// Direction of the geodesic from `base` towards `target`.
    pub fn toward(base: &HPoint, target: &HPoint) -> Result<Self> {
        Self::new(base.clone(), target.vector())
            .map_err(|_| GeometryError::InvalidParameter("target coincides with base".into()))
    }

    pub fn base(&self) -> &HPoint {
        &self.base
    }

    pub fn vector(&self) -> &LorentzVector {
        &self.u
    }

    pub fn negated(&self) -> Self {
        Self {
            base: self.base.clone(),
            u: -&self.u,
        }
    }

    /// `cosh t * base + sinh t * u`.
    pub fn point_at(&self, t: f64) -> HPoint {
        HPoint::from_timelike_unchecked(LorentzVector::combine(
            t.cosh(),
            self.base.vector(),
            t.sinh(),
            &self.u,
        ))
    }

    /// Velocity of the geodesic at parameter `t`: `sinh t * base + cosh t * u`.
    pub fn velocity_at(&self, t: f64) -> LorentzVector {
        LorentzVector::combine(t.sinh(), self.base.vector(), t.cosh(), &self.u)
    }
}

/// `gamma(t) = cosh t * base + sinh t * u`.
pub fn geodesic_point(dir: &UnitTangent, t: f64) -> HPoint {
    dir.point_at(t)
}

/// Closed ball of radius `radius` around `center`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ball {
    pub center: HPoint,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: HPoint, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(GeometryError::InvalidParameter(format!(
                "ball radius must be positive, got {radius}"
            )));
        }
        Ok(Self { center, radius })
    }

    pub fn contains(&self, p: &HPoint) -> bool {
        self.center.distance(p) <= self.radius + EPS_NORM
    }
}
