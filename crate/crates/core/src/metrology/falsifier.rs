use rayon::prelude::*;

use crate::body::Polytope;
use crate::error::Result;
use crate::lorentz::{pencil_hyperplane, pencil_param, HPoint, LorentzVector, UnitTangent};
use crate::metrology::search::{thickness_in_frame, SearchOptions};
use crate::EPS_CONTACT;

/// Settings for [`reducedness_falsifier`].
#[derive(Clone, Debug)]
pub struct FalsifierParams {
    /// Truncation depths per vertex, log-spaced from `min_fraction` to
    /// `max_fraction` of the thickness.
    pub offsets: usize,
    pub min_fraction: f64,
    pub max_fraction: f64,
    /// Vertices tried; evenly spread over the vertex list when there are more.
    pub max_vertices: usize,
    pub search: SearchOptions,
}

impl Default for FalsifierParams {
    fn default() -> Self {
        Self {
            offsets: 16,
            min_fraction: 3e-4,
            max_fraction: 0.3,
            max_vertices: 12,
            search: SearchOptions::default(),
        }
    }
}

/// A proper convex subset whose thickness is not smaller than the body's.
#[derive(Clone, Debug)]
pub struct FalsifierWitness {
    pub body: Polytope,
    pub vertex: usize,
    pub offset: f64,
    pub thickness: f64,
    pub original_thickness: f64,
}

/// Searches single-vertex truncations `Z` of `c` with thickness at least
/// `thickness(c) - EPS_CONTACT`. Finding one shows `c` is not reduced;
/// finding none proves nothing.
pub fn reducedness_falsifier(c: &Polytope, params: &FalsifierParams) -> Result<Option<FalsifierWitness>> {
    let frame = c.intrinsic_frame();
    let base = c.interior_reference().clone();
    let delta = thickness_in_frame(c, &frame, &params.search)?.value;
    let n = c.len();
    let picks: Vec<usize> = if n <= params.max_vertices {
        (0..n).collect()
    } else {
        (0..params.max_vertices).map(|k| k * n / params.max_vertices).collect()
    };
    let k = params.offsets.max(1);
    let offsets: Vec<f64> = (0..k)
        .map(|i| {
            let f = if k == 1 {
                params.max_fraction
            } else {
                let r = i as f64 / (k - 1) as f64;
                params.min_fraction * (params.max_fraction / params.min_fraction).powf(r)
            };
            f * delta
        })
        .collect();
    let jobs: Vec<(usize, f64)> = picks
        .iter()
        .flat_map(|&v| offsets.iter().map(move |&s| (v, s)))
        .collect();
    let found: Vec<Option<FalsifierWitness>> = jobs
        .par_iter()
        .map(|&(v, s)| {
            let z = truncate(c, &base, v, s)?;
            let th = thickness_in_frame(&z, &frame, &params.search).ok()?.value;
            (th >= delta - EPS_CONTACT).then_some(FalsifierWitness {
                body: z,
                vertex: v,
                offset: s,
                thickness: th,
                original_thickness: delta,
            })
        })
        .collect();
    Ok(found.into_iter().flatten().next())
}

/// Cuts `c` by the hyperplane orthogonal to the ray from `base` toward
/// vertex `v`, at depth `s` below the outermost supporting hyperplane.
fn truncate(c: &Polytope, base: &HPoint, v: usize, s: f64) -> Option<Polytope> {
    let dir = UnitTangent::toward(base, c.vertex(v)).ok()?;
    let ts: Vec<f64> = c.vertices().iter().map(|p| pencil_param(&dir, p)).collect();
    let cut = ts.iter().cloned().fold(f64::NEG_INFINITY, f64::max) - s;
    if cut <= 0.0 {
        return None;
    }
    // The normal points toward the vertex, so the kept part is where `side <= 0`.
    let h = pencil_hyperplane(&dir, cut);
    let side: Vec<f64> = c.vertices().iter().map(|p| -h.normal().dot(p.vector())).collect();
    let mut pts: Vec<HPoint> = Vec::new();
    for (i, p) in c.vertices().iter().enumerate() {
        if side[i] >= 0.0 {
            pts.push(p.clone());
        }
    }
    for i in 0..c.len() {
        for j in 0..c.len() {
            let (a, b) = (side[i], side[j]);
            if a > 0.0 && b < 0.0 {
                let w = LorentzVector::combine(-b, c.vertex(i).vector(), a, c.vertex(j).vector());
                pts.push(HPoint::from_timelike(w).ok()?);
            }
        }
    }
    Polytope::new(pts).ok()
}

