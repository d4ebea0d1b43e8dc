use crate::body::hull::KleinHull;
use crate::body::Polytope;
use crate::error::Result;
use crate::lorentz::{from_klein, pencil_param, to_klein, HPoint, UnitTangent};
use crate::metrology::search::{thickness, SearchOptions};
use crate::metrology::width::{diameter, width_h};
use crate::EPS_CONTACT;

/// Pencil parameters of all vertices along the geodesic through a diameter
/// pair `a -> b`, as `(min, max, |ab|)`.
pub fn diameter_strip_range(c: &Polytope) -> Result<(f64, f64, f64)> {
    let d = diameter(c);
    let dir = UnitTangent::toward(&d.a, &d.b)?;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in c.vertices() {
        let t = pencil_param(&dir, v);
        lo = lo.min(t);
        hi = hi.max(t);
    }
    Ok((lo, hi, d.value))
}

/// Whether the body lies in the strip between the hyperplanes orthogonal to
/// a diameter segment at its endpoints.
pub fn verify_diameter_strip(c: &Polytope) -> bool {
    match diameter_strip_range(c) {
        Ok((lo, hi, len)) => lo >= -1e-9 && hi <= len + 1e-9,
        Err(_) => false,
    }
}

/// Tolerances for [`theorem2_check`].
#[derive(Clone, Debug)]
pub struct Theorem2Params {
    /// The foot must be this close to the contact set.
    pub tol: f64,
    /// Vertices this close to the thickness hyperplane count as contacts.
    pub contact_tol: f64,
    /// A second vertex this close to the maximal distance makes the farthest
    /// point non-unique.
    pub unique_tol: f64,
    pub search: SearchOptions,
}

impl Default for Theorem2Params {
    fn default() -> Self {
        Self {
            tol: 1e-6,
            contact_tol: 1e-6,
            unique_tol: EPS_CONTACT,
            search: SearchOptions::default(),
        }
    }
}

/// Result of testing that the foot of the farthest point lies in the contact
/// set of a thickness-attaining hyperplane.
#[derive(Clone, Debug)]
pub enum Theorem2Outcome {
    Holds { foot_gap: f64, far_point: HPoint, foot: HPoint },
    Violated { foot_gap: f64, far_point: HPoint, foot: HPoint },
    /// The farthest point is not unique.
    Inapplicable { margin: f64 },
}

impl Theorem2Outcome {
    pub fn holds(&self) -> bool {
        matches!(self, Theorem2Outcome::Holds { .. })
    }
}

pub fn theorem2_check(c: &Polytope, params: &Theorem2Params) -> Result<Theorem2Outcome> {
    let th = thickness(c, &params.search)?;
    let h = &th.hyperplane;
    let w = width_h(c, h)?;
    let mut dists: Vec<f64> = c.vertices().iter().map(|v| h.signed_distance(v)).collect();
    dists.sort_by(|a, b| b.total_cmp(a));
    let margin = dists[0] - dists.get(1).copied().unwrap_or(f64::NEG_INFINITY);
    if margin <= params.unique_tol {
        return Ok(Theorem2Outcome::Inapplicable { margin });
    }
    let foot = w.foot();
    let gap = contact_gap(c, h, &foot, params.contact_tol)?;
    let (far_point, foot_gap) = (w.far_point, gap);
    Ok(if foot_gap <= params.tol {
        Theorem2Outcome::Holds { foot_gap, far_point, foot }
    } else {
        Theorem2Outcome::Violated { foot_gap, far_point, foot }
    })
}

/// Distance from `p` to the hull of the vertices within `contact_tol` of `h`.
pub fn contact_gap(c: &Polytope, h: &crate::lorentz::Hyperplane, p: &HPoint, contact_tol: f64) -> Result<f64> {
    let contacts: Vec<Vec<f64>> = c
        .vertices()
        .iter()
        .filter(|v| h.signed_distance(v).abs() <= contact_tol)
        .map(to_klein)
        .collect();
    if contacts.is_empty() {
        return Ok(f64::INFINITY);
    }
    let proj = KleinHull::new(&contacts).project(&to_klein(p), None);
    Ok(from_klein(&proj.nearest)?.distance(p))
}
