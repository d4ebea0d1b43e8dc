//! Conversions between the hyperboloid and the Klein / Poincaré ball models.

use crate::error::{GeometryError, Result};
use crate::lorentz::{HPoint, LorentzVector};

/// Klein (projective) coordinates `x / x_{d+1}`.
pub fn to_klein(p: &HPoint) -> Vec<f64> {
    let t = p.vector().time();
    p.vector().spatial().iter().map(|x| x / t).collect()
}

/// Inverse of [`to_klein`]: `(y, 1) / sqrt(1 - |y|^2)`.
pub fn from_klein(y: &[f64]) -> Result<HPoint> {
    let r2: f64 = y.iter().map(|c| c * c).sum();
    if !(r2 < 1.0) {
        return Err(GeometryError::IdealPoint(r2.sqrt()));
    }
    let s = 1.0 / (1.0 - r2).sqrt();
    let mut c: Vec<f64> = y.iter().map(|v| v * s).collect();
    c.push(s);
    HPoint::from_timelike(LorentzVector::new(c)?)
}

/// Poincaré ball coordinates `x / (1 + x_{d+1})`.
pub fn to_poincare(p: &HPoint) -> Vec<f64> {
    let t = p.vector().time();
    p.vector().spatial().iter().map(|x| x / (1.0 + t)).collect()
}

/// Inverse of [`to_poincare`].
pub fn from_poincare(y: &[f64]) -> Result<HPoint> {
    let r2: f64 = y.iter().map(|c| c * c).sum();
    if !(r2 < 1.0) {
        return Err(GeometryError::IdealPoint(r2.sqrt()));
    }
    let k = 1.0 / (1.0 - r2);
    let mut c: Vec<f64> = y.iter().map(|v| 2.0 * v * k).collect();
    c.push((1.0 + r2) * k);
    HPoint::from_timelike(LorentzVector::new(c)?)
}

/// Klein coordinates of a point at infinity to Poincaré coordinates; both
/// models agree on the boundary sphere, and inside `y / (1 + sqrt(1 - |y|^2))`.
pub fn klein_to_poincare(y: &[f64]) -> Vec<f64> {
    let r2: f64 = y.iter().map(|c| c * c).sum();
    let s = 1.0 + (1.0 - r2).max(0.0).sqrt();
    y.iter().map(|v| v / s).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_maps_to_center() {
        let o = HPoint::origin(2);
        assert_eq!(to_klein(&o), vec![0.0, 0.0]);
        assert_eq!(to_poincare(&o), vec![0.0, 0.0]);
    }

    #[test]
    fn from_klein_example() {
        let p = from_klein(&[0.5, 0.0]).unwrap();
        let c = p.coords();
        // (y, 1) / sqrt(1 - 1/4)
        let s = 1.0 / 0.75f64.sqrt();
        assert!((c[0] - 0.5 * s).abs() < 1e-15);
        assert!(c[1].abs() < 1e-15);
        assert!((c[2] - s).abs() < 1e-15);
        assert!((c[0] - 0.577_350_269_189_625_8).abs() < 1e-12);
        assert!((c[2] - 1.154_700_538_379_251_5).abs() < 1e-12);
    }

    #[test]
    fn ideal_points_rejected() {
        assert!(matches!(from_klein(&[1.0, 0.0]), Err(GeometryError::IdealPoint(_))));
        assert!(from_klein(&[0.8, 0.8]).is_err());
        assert!(from_poincare(&[0.0, 1.0]).is_err());
    }

    #[test]
    fn poincare_round_trip() {
        let p = HPoint::from_spatial(&[1.2, -0.4]).unwrap();
        let q = from_poincare(&to_poincare(&p)).unwrap();
        assert!(p.distance(&q) < 1e-12);
        let y = to_klein(&p);
        let z = klein_to_poincare(&y);
        let w = to_poincare(&p);
        assert!((z[0] - w[0]).abs() < 1e-14 && (z[1] - w[1]).abs() < 1e-14);
    }
}
