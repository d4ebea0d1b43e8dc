use crate::body::Polytope;
use crate::error::{GeometryError, Result};
use crate::lorentz::{pencil_hyperplane, pencil_param, HPoint, Hyperplane, UnitTangent};
use crate::EPS_CONTACT;

/// The two supporting hyperplanes of a polytope orthogonal to a geodesic.
#[derive(Clone, Debug)]
pub struct PencilSupport {
    pub t_minus: f64,
    pub t_plus: f64,
    pub contact_minus: Vec<usize>,
    pub contact_plus: Vec<usize>,
    /// `n(t_minus)`, body on its nonnegative side.
    pub h_minus: Hyperplane,
    /// `-n(t_plus)`, body on its nonnegative side.
    pub h_plus: Hyperplane,
}

/// Which member of a [`PencilSupport`] pair to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Minus,
    Plus,
}

impl Side {
    pub fn opposite(self) -> Self {
        match self {
            Side::Minus => Side::Plus,
            Side::Plus => Side::Minus,
        }
    }
}

impl PencilSupport {
    pub fn hyperplane(&self, side: Side) -> &Hyperplane {
        match side {
            Side::Minus => &self.h_minus,
            Side::Plus => &self.h_plus,
        }
    }
}

/// Supporting hyperplanes of `p` in the pencil orthogonal to `dir`, which
/// must start inside the body.
pub fn pencil_support(p: &Polytope, dir: &UnitTangent) -> Result<PencilSupport> {
    if !p.contains(dir.base()) {
        return Err(GeometryError::BaseNotInterior);
    }
    Ok(pencil_support_unchecked(p, dir))
}

pub(crate) fn pencil_support_unchecked(p: &Polytope, dir: &UnitTangent) -> PencilSupport {
    let ts: Vec<f64> = p.vertices().iter().map(|v| pencil_param(dir, v)).collect();
    let mut lo = 0;
    let mut hi = 0;
    for (i, &t) in ts.iter().enumerate() {
        if t < ts[lo] {
            lo = i;
        }
        if t > ts[hi] {
            hi = i;
        }
    }
    let h_minus = pencil_hyperplane(dir, ts[lo]);
    let h_plus = pencil_hyperplane(dir, ts[hi]).flipped();
    let contact = |h: &Hyperplane| -> Vec<usize> {
        p.vertices()
            .iter()
            .enumerate()
            .filter(|(_, v)| h.signed_distance(v) <= EPS_CONTACT)
            .map(|(i, _)| i)
            .collect()
    };
    PencilSupport {
        t_minus: ts[lo],
        t_plus: ts[hi],
        contact_minus: contact(&h_minus),
        contact_plus: contact(&h_plus),
        h_minus,
        h_plus,
    }
}

/// A vertex farthest from a hyperplane and its distance.
#[derive(Clone, Debug)]
pub struct Farthest {
    pub index: usize,
    pub point: HPoint,
    pub distance: f64,
}

/// The vertex maximizing the distance to `h`; the body must lie on the
/// nonnegative side. Ties go to the lowest index.
pub fn farthest_from_hyperplane(p: &Polytope, h: &Hyperplane) -> Result<Farthest> {
    let mut best = 0;
    let mut best_s = f64::NEG_INFINITY;
    for (i, v) in p.vertices().iter().enumerate() {
        let s = h.normal().dot(v.vector());
        let dist = s.asinh();
        if dist < -EPS_CONTACT {
            return Err(GeometryError::HyperplaneCutsBody(dist));
        }
        if s > best_s {
            best_s = s;
            best = i;
        }
    }
    Ok(Farthest {
        index: best,
        point: p.vertex(best).clone(),
        distance: best_s.asinh(),
    })
}
