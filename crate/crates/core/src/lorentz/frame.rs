use crate::error::{GeometryError, Result};
use crate::lorentz::{HPoint, Isometry, LorentzVector, UnitTangent};

/// An orthonormal basis of the tangent space at a point, used to turn
/// Euclidean direction coordinates into unit tangents.
#[derive(Clone, Debug)]
pub struct TangentFrame {
    base: HPoint,
    basis: Vec<LorentzVector>,
}

impl TangentFrame {
    /// The standard basis transported from the origin by the boost to `base`.
    pub fn canonical(base: &HPoint) -> Self {
        let d = base.dim();
        let boost = Isometry::boost_to(base);
        let basis = (0..d)
            .map(|i| boost.apply_vector(&LorentzVector::basis(d, i)))
            .collect();
        Self {
            base: base.clone(),
            basis,
        }
    }

    /// Gram–Schmidt on the directions towards `targets`, in order, skipping
    /// dependent ones. Deterministic and equivariant under isometries.
    pub fn from_targets(base: &HPoint, targets: &[HPoint]) -> Result<Self> {
        let d = base.dim();
        let mut basis: Vec<LorentzVector> = Vec::with_capacity(d);
        for t in targets {
            if basis.len() == d {
                break;
            }
            let Ok(dir) = UnitTangent::toward(base, t) else {
                continue;
            };
            let mut w = dir.vector().clone();
            for b in &basis {
                w = w.add_scaled(-w.dot(b), b);
            }
            let n = w.norm_sq();
            if n > 1e-12 {
                basis.push(w.scaled(1.0 / n.sqrt()));
            }
        }
        if basis.len() < d {
            return Err(GeometryError::Degenerate(
                "targets do not span the tangent space".into(),
            ));
        }
        Ok(Self {
            base: base.clone(),
            basis,
        })
    }

    pub fn base(&self) -> &HPoint {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LorentzVector] {
        &self.basis
    }

    /// Unit tangent with coordinates `a` (normalized) in this frame.
    pub fn direction(&self, a: &[f64]) -> Result<UnitTangent> {
        if a.len() != self.basis.len() {
            return Err(GeometryError::DimensionMismatch {
                expected: self.basis.len(),
                found: a.len(),
            });
        }
        let mut w = LorentzVector::zeros(self.base.dim());
        for (c, b) in a.iter().zip(&self.basis) {
            w = w.add_scaled(*c, b);
        }
        UnitTangent::new(self.base.clone(), &w)
    }

    /// Frame coordinates of a tangent vector.
    pub fn coordinates(&self, u: &LorentzVector) -> Vec<f64> {
        self.basis.iter().map(|b| b.dot(u)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_frame_is_orthonormal_and_tangent() {
        let p = HPoint::from_spatial(&[0.4, -0.9, 1.3]).unwrap();
        let f = TangentFrame::canonical(&p);
        for (i, a) in f.basis().iter().enumerate() {
            assert!(a.dot(p.vector()).abs() < 1e-13);
            for (j, b) in f.basis().iter().enumerate() {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((a.dot(b) - expect).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn frame_coordinates_round_trip() {
        let p = HPoint::from_spatial(&[0.4, 0.2]).unwrap();
        let f = TangentFrame::canonical(&p);
        let u = f.direction(&[3.0, 4.0]).unwrap();
        let c = f.coordinates(u.vector());
        assert!((c[0] - 0.6).abs() < 1e-14 && (c[1] - 0.8).abs() < 1e-14);
    }

    #[test]
    fn targets_must_span() {
        let o = HPoint::origin(2);
        let a = HPoint::from_spatial(&[1.0, 0.0]).unwrap();
        let b = HPoint::from_spatial(&[2.0, 0.0]).unwrap();
        assert!(TangentFrame::from_targets(&o, &[a.clone(), b]).is_err());
        let c = HPoint::from_spatial(&[0.0, 1.0]).unwrap();
        assert!(TangentFrame::from_targets(&o, &[a, c]).is_ok());
    }
}
