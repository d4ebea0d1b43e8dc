use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{GeometryError, Result};

/// A vector of the ambient Minkowski space R^{d,1}.
///
/// The last coordinate is the timelike one, so the bilinear form is
/// `<u,v> = u_1 v_1 + ... + u_d v_d - u_{d+1} v_{d+1}`.
#[derive(Clone, PartialEq)]
pub struct LorentzVector(Vec<f64>);

impl LorentzVector {
    /// Wraps raw coordinates. Requires at least three finite entries (d >= 2).
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 3 {
            return Err(GeometryError::DimensionTooSmall(coords.len().saturating_sub(1)));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        Ok(Self(coords))
    }

    pub(crate) fn from_vec_unchecked(coords: Vec<f64>) -> Self {
        Self(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![0.0; dim + 1])
    }

    /// The i-th standard basis vector of R^{d+1}.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = vec![0.0; dim + 1];
        v[i] = 1.0;
        Self(v)
    }

    /// Hyperbolic dimension d (the ambient space has d+1 coordinates).
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    /// Last (timelike) coordinate.
    pub fn time(&self) -> f64 {
        self.0[self.0.len() - 1]
    }

    /// Spatial part (first d coordinates).
    pub fn spatial(&self) -> &[f64] {
        &self.0[..self.0.len() - 1]
    }

    /// Minkowski product. Dimensions are assumed equal.
    #[inline]
    pub fn dot(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.0.len(), other.0.len());
        let n = self.0.len() - 1;
        let mut s = 0.0;
        for i in 0..n {
            s += self.0[i] * other.0[i];
        }
        s - self.0[n] * other.0[n]
    }

    /// Minkowski "squared norm" `<v,v>`.
    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    /// Largest absolute coordinate, used to scale tolerances.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self(self.0.iter().map(|c| c * s).collect())
    }

    /// `a * u + b * v`.
    pub fn combine(a: f64, u: &Self, b: f64, v: &Self) -> Self {
        debug_assert_eq!(u.0.len(), v.0.len());
        Self(u.0.iter().zip(&v.0).map(|(x, y)| a * x + b * y).collect())
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, s: f64, other: &Self) -> Self {
        Self::combine(1.0, self, s, other)
    }
}

/// Minkowski bilinear form with a dimension check.
pub fn mink(u: &LorentzVector, v: &LorentzVector) -> Result<f64> {
    if u.0.len() != v.0.len() {
        return Err(GeometryError::DimensionMismatch {
            expected: u.0.len(),
            found: v.0.len(),
        });
    }
    Ok(u.dot(v))
}

impl Index<usize> for LorentzVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for &LorentzVector {
    type Output = LorentzVector;

    fn add(self, rhs: Self) -> LorentzVector {
        LorentzVector::combine(1.0, self, 1.0, rhs)
    }
}

impl Sub for &LorentzVector {
    type Output = LorentzVector;

    fn sub(self, rhs: Self) -> LorentzVector {
        LorentzVector::combine(1.0, self, -1.0, rhs)
    }
}

impl Neg for &LorentzVector {
    type Output = LorentzVector;

    fn neg(self) -> LorentzVector {
        self.scaled(-1.0)
    }
}

impl fmt::Debug for LorentzVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_is_unit_timelike() {
        let o = LorentzVector::new(vec![0.0, 0.0, 1.0]).unwrap();
        assert_eq!(mink(&o, &o).unwrap(), -1.0);
    }

    #[test]
    fn basis_vector_is_unit_spacelike() {
        let e1 = LorentzVector::basis(3, 0);
        assert_eq!(mink(&e1, &e1).unwrap(), 1.0);
    }

    #[test]
    fn product_with_geodesic_point() {
        let o = LorentzVector::new(vec![0.0, 0.0, 1.0]).unwrap();
        let p = LorentzVector::new(vec![1f64.sinh(), 0.0, 1f64.cosh()]).unwrap();
        // -cosh 1
        assert!((mink(&o, &p).unwrap() + 1.543_080_634_815_243_7).abs() < 1e-15);
    }

    #[test]
    fn mismatched_dimensions_error() {
        let u = LorentzVector::zeros(2);
        let v = LorentzVector::zeros(3);
        assert!(matches!(
            mink(&u, &v),
            Err(GeometryError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rejects_small_and_non_finite() {
        assert!(LorentzVector::new(vec![0.0, 1.0]).is_err());
        assert!(LorentzVector::new(vec![0.0, f64::NAN, 1.0]).is_err());
    }
}
