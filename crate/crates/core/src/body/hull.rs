//! Hull membership as a small nonnegative least-squares problem.
//!
//! A point lies in the hyperbolic convex hull of finitely many points iff its
//! Lorentz vector is a nonnegative combination of theirs, which in Klein
//! coordinates is ordinary convex-hull membership. The weights are found with
//! the Lawson–Hanson active-set method on columns `(y_i, W)` against the
//! target `(y, W)`. With `W = 1` this is cone membership of `(y, 1)`, which
//! is exact for the inside/outside decision; a heavy `W` approximates the
//! constraint `sum(lambda) = 1` and yields the Euclidean nearest point.

use nalgebra::{DMatrix, DVector};

const SUM_WEIGHT: f64 = 1e3;
const CONE_WEIGHT: f64 = 1.0;

/// Result of projecting a Klein point onto a Klein hull.
#[derive(Clone, Debug)]
#[allow(dead_code)]
pub(crate) struct HullProjection {
    /// Convex weights (sum to one).
    pub weights: Vec<f64>,
    /// Nearest hull point, Klein coordinates.
    pub nearest: Vec<f64>,
    /// Euclidean Klein distance from the query to `nearest`.
    pub distance: f64,
}

/// Column-major matrix of augmented Klein columns.
#[derive(Clone, Debug)]
pub(crate) struct KleinHull {
    rows: usize,
    cols: Vec<f64>,
    weight: f64,
}

impl KleinHull {
    pub fn new(points: &[Vec<f64>]) -> Self {
        let d = points.first().map_or(0, |p| p.len());
        let rows = d + 1;
        let mut cols = Vec::with_capacity(points.len() * rows);
        for p in points {
            cols.extend_from_slice(p);
            cols.push(1.0);
        }
        Self {
            rows,
            cols,
            weight: 1.0,
        }
    }

    fn reweighted(&self, w: f64) -> Self {
        let mut out = self.clone();
        for j in 0..self.len() {
            out.cols[j * self.rows + self.rows - 1] = w;
        }
        out.weight = w;
        out
    }

    pub fn len(&self) -> usize {
        self.cols.len() / self.rows
    }

    fn column(&self, j: usize) -> &[f64] {
        &self.cols[j * self.rows..(j + 1) * self.rows]
    }

    /// Residual of the cone-membership problem: zero (up to rounding) iff
    /// `y` lies in the hull. `skip` excludes one column.
    pub fn membership_residual(&self, y: &[f64], skip: Option<usize>) -> f64 {
        let a = if self.weight == CONE_WEIGHT {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.reweighted(CONE_WEIGHT))
        };
        let mut b = y.to_vec();
        b.push(CONE_WEIGHT);
        let x = nnls(&a, &b, skip);
        let mut r = b;
        for (j, w) in x.iter().enumerate() {
            if *w != 0.0 {
                for (ri, ci) in r.iter_mut().zip(a.column(j)) {
                    *ri -= w * ci;
                }
            }
        }
        r.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Projects `y` onto the hull; `skip` excludes one column.
    pub fn project(&self, y: &[f64], skip: Option<usize>) -> HullProjection {
        let a = self.reweighted(SUM_WEIGHT);
        let mut b = y.to_vec();
        b.push(SUM_WEIGHT);
        let x = nnls(&a, &b, skip);
        let total: f64 = x.iter().sum();
        let d = self.rows - 1;
        let mut nearest = vec![0.0; d];
        let weights: Vec<f64> = if total > 0.0 {
            x.iter().map(|w| w / total).collect()
        } else {
            x
        };
        for (j, w) in weights.iter().enumerate() {
            if *w != 0.0 {
                let c = self.column(j);
                for k in 0..d {
                    nearest[k] += w * c[k];
                }
            }
        }
        let distance = nearest
            .iter()
            .zip(y)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        HullProjection {
            weights,
            nearest,
            distance,
        }
    }
}

/// Lawson–Hanson NNLS: `min |A x - b|` subject to `x >= 0`.
fn nnls(a: &KleinHull, b: &[f64], skip: Option<usize>) -> Vec<f64> {
    let m = a.rows;
    let n = a.len();
    let mut x = vec![0.0; n];
    let mut passive: Vec<usize> = Vec::new();
    let mut banned = vec![false; n];
    if let Some(s) = skip {
        banned[s] = true;
    }
    let bnorm = b.iter().map(|v| v * v).sum::<f64>().sqrt();
    let cmax = (0..n)
        .map(|j| a.column(j).iter().map(|v| v * v).sum::<f64>().sqrt())
        .fold(0.0, f64::max);
    let tol = 1e-15 * bnorm * cmax;
    let mut residual = b.to_vec();

    for _outer in 0..(3 * n + 10) {
        // Gradient of the dual: w = A^T (b - A x).
        let mut best = None;
        let mut best_w = tol;
        for j in 0..n {
            if banned[j] || passive.contains(&j) {
                continue;
            }
            let c = a.column(j);
            let w: f64 = c.iter().zip(&residual).map(|(p, q)| p * q).sum();
            if w > best_w {
                best_w = w;
                best = Some(j);
            }
        }
        let Some(j) = best else { break };
        passive.push(j);

        let mut progressed = false;
        for _inner in 0..(n + 5) {
            let z = least_squares(a, &passive, b);
            if z.iter().all(|&v| v > 0.0) {
                for (k, &idx) in passive.iter().enumerate() {
                    x[idx] = z[k];
                }
                progressed = true;
                break;
            }
            // Step back to the boundary of the feasible region.
            let mut alpha = f64::INFINITY;
            for (k, &idx) in passive.iter().enumerate() {
                if z[k] <= 0.0 {
                    let denom = x[idx] - z[k];
                    let r = if denom > 0.0 { x[idx] / denom } else { 0.0 };
                    alpha = alpha.min(r);
                }
            }
            if !alpha.is_finite() {
                alpha = 0.0;
            }
            for (k, &idx) in passive.iter().enumerate() {
                x[idx] += alpha * (z[k] - x[idx]);
            }
            let before = passive.len();
            passive.retain(|&idx| {
                if x[idx] <= 1e-15 {
                    x[idx] = 0.0;
                    false
                } else {
                    true
                }
            });
            if passive.is_empty() || passive.len() == before {
                break;
            }
        }
        if !progressed {
            // The entering column could not be made positive: do not retry it.
            banned[j] = true;
            passive.retain(|&idx| idx != j);
            x[j] = 0.0;
        }
        for (i, r) in residual.iter_mut().enumerate() {
            *r = b[i];
        }
        for &idx in &passive {
            let c = a.column(idx);
            for i in 0..m {
                residual[i] -= x[idx] * c[i];
            }
        }
    }
    x
}

fn least_squares(a: &KleinHull, cols: &[usize], b: &[f64]) -> Vec<f64> {
    let m = a.rows;
    let k = cols.len();
    let mat = DMatrix::<f64>::from_fn(m, k, |i, j| a.column(cols[j])[i]);
    let rhs = DVector::<f64>::from_column_slice(b);
    let svd = mat.svd(true, true);
    match svd.solve(&rhs, 1e-14) {
        Ok(s) => s.iter().cloned().collect(),
        Err(_) => vec![0.0; k],
    }
}
