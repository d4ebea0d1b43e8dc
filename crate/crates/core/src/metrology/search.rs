use rayon::prelude::*;

use crate::body::{pencil_support_unchecked, Polytope, Side};
use crate::directions::{direction_grid, grid_spacing};
use crate::error::Result;
use crate::lorentz::{Hyperplane, TangentFrame, UnitTangent};
use crate::metrology::width::pencil_widths;

/// Grid and refinement settings for searches over the direction sphere.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Grid size; `None` picks 720 for d = 2 and 4096 for d = 3.
    pub grid: Option<usize>,
    /// Maximum number of step halvings in the compass search.
    pub refine_iters: usize,
    /// Compass search stops once the step drops below this angle.
    pub min_step: f64,
    /// Number of grid cells that get refined: the best cells whose
    /// hyperplanes lie at least three grid spacings apart.
    pub seeds: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            grid: None,
            refine_iters: 40,
            min_step: 1e-12,
            seeds: 8,
        }
    }
}

impl SearchOptions {
    pub fn grid_for(&self, dim: usize) -> usize {
        self.grid.unwrap_or(if dim == 2 { 720 } else { 4096 })
    }

    pub fn with_grid(mut self, grid: usize) -> Self {
        self.grid = Some(grid);
        self
    }

    pub fn with_refine_iters(mut self, iters: usize) -> Self {
        self.refine_iters = iters;
        self
    }
}

/// Extreme width over supporting hyperplanes found by grid search plus
/// compass refinement.
#[derive(Clone, Debug)]
pub struct ExtremalWidth {
    pub value: f64,
    /// Pencil direction at the search base point.
    pub direction: UnitTangent,
    /// Coordinates of `direction` in the search frame.
    pub frame_coords: Vec<f64>,
    pub side: Side,
    /// The supporting hyperplane attaining `value`.
    pub hyperplane: Hyperplane,
    pub grid_size: usize,
    pub refined: bool,
}

/// Thickness report: the smallest width found.
pub type ThicknessReport = ExtremalWidth;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Min,
    Max,
}

/// Width values over a direction grid, in the given frame.
#[derive(Clone, Debug)]
pub struct WidthProfile {
    pub directions: Vec<Vec<f64>>,
    /// `(minus, plus)` widths per direction.
    pub widths: Vec<(f64, f64)>,
}

impl WidthProfile {
    pub fn min(&self) -> f64 {
        self.widths.iter().map(|w| w.0.min(w.1)).fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.widths.iter().map(|w| w.0.max(w.1)).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn mean(&self) -> f64 {
        let s: f64 = self.widths.iter().map(|w| w.0 + w.1).sum();
        s / (2 * self.widths.len()) as f64
    }
}

/// Both pencil widths for every direction of the grid in `frame`.
pub fn width_profile(c: &Polytope, frame: &TangentFrame, grid: usize) -> Result<WidthProfile> {
    let directions = direction_grid(c.dim(), grid)?;
    let widths = directions
        .par_iter()
        .map(|a| pencil_widths(c, &frame.direction(a).expect("frame matches dimension")))
        .collect();
    Ok(WidthProfile { directions, widths })
}

/// Thickness: the minimum width over both pencil sides of every grid
/// direction at the body's reference point, refined by compass search.
pub fn thickness(c: &Polytope, opts: &SearchOptions) -> Result<ThicknessReport> {
    thickness_in_frame(c, &c.intrinsic_frame(), opts)
}

/// [`thickness`] with an explicit base point and frame (the base must lie
/// inside the body).
pub fn thickness_in_frame(c: &Polytope, frame: &TangentFrame, opts: &SearchOptions) -> Result<ThicknessReport> {
    extremal_width(c, frame, opts, Goal::Min)
}

/// Largest width over supporting hyperplanes, by the same search.
pub fn max_width(c: &Polytope, opts: &SearchOptions) -> Result<ExtremalWidth> {
    extremal_width(c, &c.intrinsic_frame(), opts, Goal::Max)
}

fn extremal_width(c: &Polytope, frame: &TangentFrame, opts: &SearchOptions, goal: Goal) -> Result<ExtremalWidth> {
    let dim = c.dim();
    let grid = opts.grid_for(dim);
    let profile = width_profile(c, frame, grid)?;
    let sign = if goal == Goal::Min { 1.0 } else { -1.0 };
    let mut cells: Vec<(f64, usize, Side)> = Vec::with_capacity(2 * grid);
    for (i, w) in profile.widths.iter().enumerate() {
        cells.push((sign * w.0, i, Side::Minus));
        cells.push((sign * w.1, i, Side::Plus));
    }
    cells.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let step0 = grid_spacing(dim, grid);
    let cells = distinct_seeds(&cells, &profile.directions, 3.0 * step0, opts.seeds.max(1));

    let refined = opts.refine_iters > 0;
    let eval = |a: &[f64], side: Side| -> f64 {
        let dir = frame.direction(a).expect("frame matches dimension");
        let (m, p) = pencil_widths(c, &dir);
        sign * if side == Side::Minus { m } else { p }
    };
    let results: Vec<(f64, Vec<f64>, Side)> = cells
        .par_iter()
        .map(|&(v, i, side)| {
            let start = profile.directions[i].clone();
            if !refined {
                return (v, start, side);
            }
            let (a, fa) = compass(&|a| eval(a, side), start, v, step0, opts);
            (fa, a, side)
        })
        .collect();
    let mut best = 0;
    for (k, r) in results.iter().enumerate() {
        if r.0 < results[best].0 {
            best = k;
        }
    }
    let (val, a, side) = results[best].clone();
    let direction = frame.direction(&a)?;
    let support = pencil_support_unchecked(c, &direction);
    Ok(ExtremalWidth {
        value: sign * val,
        frame_coords: frame.coordinates(direction.vector()),
        direction,
        side,
        hyperplane: support.hyperplane(side).clone(),
        grid_size: grid,
        refined,
    })
}

/// Picks up to `count` cells in order, skipping any whose hyperplane is
/// within `sep` of an accepted one. `(a, Plus)` and `(-a, Minus)` give the
/// same hyperplane.
fn distinct_seeds(cells: &[(f64, usize, Side)], dirs: &[Vec<f64>], sep: f64, count: usize) -> Vec<(f64, usize, Side)> {
    let key = |i: usize, side: Side| -> Vec<f64> {
        match side {
            Side::Minus => dirs[i].clone(),
            Side::Plus => dirs[i].iter().map(|x| -x).collect(),
        }
    };
    let min_cos = sep.min(std::f64::consts::PI).cos();
    let mut picked: Vec<(f64, usize, Side)> = Vec::with_capacity(count);
    let mut keys: Vec<Vec<f64>> = Vec::with_capacity(count);
    for &(v, i, side) in cells {
        let k = key(i, side);
        let near = keys
            .iter()
            .any(|q| q.iter().zip(&k).map(|(x, y)| x * y).sum::<f64>() > min_cos);
        if !near {
            picked.push((v, i, side));
            keys.push(k);
            if picked.len() == count {
                break;
            }
        }
    }
    picked
}

/// Compass search on the unit sphere minimizing `f`. Trial moves are 2
/// (d = 2) or 8 (d = 3) great-circle steps, with a 64-step ring tried
/// before a d = 3 step is halved; the pattern is rotated between step
/// levels.
fn compass(f: &dyn Fn(&[f64]) -> f64, start: Vec<f64>, f0: f64, step0: f64, opts: &SearchOptions) -> (Vec<f64>, f64) {
    let mut x = start;
    let mut fx = f0;
    let mut step = step0;
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    for level in 0..opts.refine_iters {
        if step < opts.min_step {
            break;
        }
        for _ in 0..200 {
            let twist = golden * level as f64;
            let trials = moves(&x, step, twist, 8);
            let mut moved = try_moves(f, &mut x, &mut fx, trials);
            // Descent along a crease of the width function can fall between
            // the coarse pattern's directions.
            if !moved && x.len() > 2 {
                let trials = moves(&x, step, twist, 64);
                moved = try_moves(f, &mut x, &mut fx, trials);
            }
            if !moved {
                break;
            }
        }
        step *= 0.5;
    }
    (x, fx)
}

fn try_moves(f: &dyn Fn(&[f64]) -> f64, x: &mut Vec<f64>, fx: &mut f64, trials: Vec<Vec<f64>>) -> bool {
    for trial in trials {
        let ft = f(&trial);
        if ft < *fx {
            *x = trial;
            *fx = ft;
            return true;
        }
    }
    false
}

fn moves(x: &[f64], step: f64, twist: f64, count: usize) -> Vec<Vec<f64>> {
    let (s, c) = step.sin_cos();
    match x.len() {
        2 => {
            let t = [-x[1], x[0]];
            vec![
                vec![c * x[0] + s * t[0], c * x[1] + s * t[1]],
                vec![c * x[0] - s * t[0], c * x[1] - s * t[1]],
            ]
        }
        _ => {
            let (t1, t2) = tangent_basis(x);
            (0..count)
                .map(|k| {
                    let g = twist + std::f64::consts::TAU * k as f64 / count as f64;
                    let (gs, gc) = g.sin_cos();
                    let v: Vec<f64> = (0..3)
                        .map(|i| c * x[i] + s * (gc * t1[i] + gs * t2[i]))
                        .collect();
                    let n = v.iter().map(|a| a * a).sum::<f64>().sqrt();
                    v.into_iter().map(|a| a / n).collect()
                })
                .collect()
        }
    }
}

fn tangent_basis(x: &[f64]) -> ([f64; 3], [f64; 3]) {
    let axis = if x[0].abs() <= x[1].abs() && x[0].abs() <= x[2].abs() {
        [1.0, 0.0, 0.0]
    } else if x[1].abs() <= x[2].abs() {
        [0.0, 1.0, 0.0]
    } else {
        [0.0, 0.0, 1.0]
    };
    let d: f64 = (0..3).map(|i| axis[i] * x[i]).sum();
    let mut t1 = [axis[0] - d * x[0], axis[1] - d * x[1], axis[2] - d * x[2]];
    let n = (t1[0] * t1[0] + t1[1] * t1[1] + t1[2] * t1[2]).sqrt();
    for v in &mut t1 {
        *v /= n;
    }
    let t2 = [
        x[1] * t1[2] - x[2] * t1[1],
        x[2] * t1[0] - x[0] * t1[2],
        x[0] * t1[1] - x[1] * t1[0],
    ];
    (t1, t2)
}
