use nalgebra::DMatrix;
use rand::Rng;

use crate::error::{GeometryError, Result};
use crate::lorentz::{HPoint, Hyperplane, LorentzVector, UnitTangent};

/// An isometry of H^d as a linear map of R^{d,1} preserving the form and the
/// upper sheet.
#[derive(Clone, Debug, PartialEq)]
pub struct Isometry {
    m: DMatrix<f64>,
}

impl Isometry {
    pub fn identity(dim: usize) -> Self {
        Self {
            m: DMatrix::identity(dim + 1, dim + 1),
        }
    }

    /// Validates that `m` preserves the Minkowski form.
    pub fn from_matrix(m: DMatrix<f64>) -> Result<Self> {
        let n = m.nrows();
        if n != m.ncols() || n < 3 {
            return Err(GeometryError::InvalidParameter("isometry matrix must be square, size >= 3".into()));
        }
        let j = minkowski_gram(n - 1);
        let err = (m.transpose() * &j * &m - &j).abs().max();
        if err > 1e-9 * m.abs().max().powi(2) || m[(n - 1, n - 1)] <= 0.0 {
            return Err(GeometryError::InvalidParameter(
                "matrix is not an orthochronous Lorentz transformation".into(),
            ));
        }
        Ok(Self { m })
    }

    /// Pure boost carrying the origin to `p` along the geodesic joining them.
    pub fn boost_to(p: &HPoint) -> Self {
        let d = p.dim();
        let x = p.vector().spatial();
        let t = p.vector().time();
        let mut m = DMatrix::<f64>::identity(d + 1, d + 1);
        for i in 0..d {
            for j in 0..d {
                m[(i, j)] += x[i] * x[j] / (1.0 + t);
            }
            m[(i, d)] = x[i];
            m[(d, i)] = x[i];
        }
        m[(d, d)] = t;
        Self { m }
    }

    /// Rotation (or reflection) about the origin by an orthogonal `d x d` matrix.
    pub fn rotation(r: &DMatrix<f64>) -> Result<Self> {
        let d = r.nrows();
        if r.ncols() != d || d < 2 {
            return Err(GeometryError::InvalidParameter("rotation must be square, d >= 2".into()));
        }
        let err = (r.transpose() * r - DMatrix::<f64>::identity(d, d)).abs().max();
        if err > 1e-10 {
            return Err(GeometryError::InvalidParameter("matrix is not orthogonal".into()));
        }
        let mut m = DMatrix::<f64>::identity(d + 1, d + 1);
        m.view_mut((0, 0), (d, d)).copy_from(r);
        Ok(Self { m })
    }

    /// A random isometry: random orthogonal map followed by a boost to a point
    /// at distance at most `max_shift` from the origin.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, dim: usize, max_shift: f64) -> Self {
        let a = DMatrix::<f64>::from_fn(dim, dim, |_, _| rng.gen_range(-1.0..1.0));
        let qr = a.qr();
        let mut q = qr.q();
        let r = qr.r();
        for j in 0..dim {
            if r[(j, j)] < 0.0 {
                let mut c = q.column_mut(j);
                c.neg_mut();
            }
        }
        let rot = Self::rotation(&q).expect("QR factor is orthogonal");
        let dir: Vec<f64> = loop {
            let v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let n2: f64 = v.iter().map(|c| c * c).sum();
            if n2 > 1e-4 && n2 <= 1.0 {
                let n = n2.sqrt();
                break v.into_iter().map(|c| c / n).collect();
            }
        };
        let s = rng.gen_range(0.0..=max_shift).sinh();
        let x: Vec<f64> = dir.iter().map(|c| c * s).collect();
        let boost = Self::boost_to(&HPoint::from_spatial(&x).expect("finite"));
        boost.compose(&rot)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Self {
        Self { m: &self.m * &other.m }
    }

    pub fn inverse(&self) -> Self {
        let j = minkowski_gram(self.m.nrows() - 1);
        Self {
            m: &j * self.m.transpose() * &j,
        }
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn apply_vector(&self, v: &LorentzVector) -> LorentzVector {
        let n = self.m.nrows();
        let out = (0..n)
            .map(|i| (0..n).map(|j| self.m[(i, j)] * v[j]).sum())
            .collect();
        LorentzVector::from_vec_unchecked(out)
    }

    pub fn apply_point(&self, p: &HPoint) -> HPoint {
        HPoint::from_timelike_unchecked(self.apply_vector(p.vector()))
    }

    pub fn apply_hyperplane(&self, h: &Hyperplane) -> Hyperplane {
        Hyperplane::new(self.apply_vector(h.normal())).expect("isometries preserve spacelike vectors")
    }

    pub fn apply_tangent(&self, t: &UnitTangent) -> UnitTangent {
        let base = self.apply_point(t.base());
        UnitTangent::new(base, &self.apply_vector(t.vector())).expect("isometries preserve tangents")
    }
}

fn minkowski_gram(dim: usize) -> DMatrix<f64> {
    let mut j = DMatrix::<f64>::identity(dim + 1, dim + 1);
    j[(dim, dim)] = -1.0;
    j
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn boost_maps_origin_to_target() {
        let p = HPoint::from_spatial(&[0.7, -1.1, 0.2]).unwrap();
        let b = Isometry::boost_to(&p);
        assert!(b.apply_point(&HPoint::origin(3)).distance(&p) < 1e-13);
        let back = b.inverse().apply_point(&p);
        assert!(back.distance(&HPoint::origin(3)) < 1e-13);
    }

    #[test]
    fn random_isometries_preserve_distance() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for d in [2, 3] {
            for _ in 0..20 {
                let g = Isometry::random(&mut rng, d, 2.0);
                assert!(Isometry::from_matrix(g.matrix().clone()).is_ok());
                let x: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let y: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let p = HPoint::from_spatial(&x).unwrap();
                let q = HPoint::from_spatial(&y).unwrap();
                let d0 = p.distance(&q);
                let d1 = g.apply_point(&p).distance(&g.apply_point(&q));
                assert!((d0 - d1).abs() < 1e-11);
            }
        }
    }

    #[test]
    fn non_lorentz_matrix_rejected() {
        let m = DMatrix::<f64>::identity(3, 3) * 2.0;
        assert!(Isometry::from_matrix(m).is_err());
    }
}
