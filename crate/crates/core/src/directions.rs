//! Direction grids on the unit circle and sphere.

use crate::error::{GeometryError, Result};

/// `n` unit vectors spread over S^{d-1}: uniform angles for d = 2, a
/// Fibonacci lattice for d = 3.
pub fn direction_grid(dim: usize, n: usize) -> Result<Vec<Vec<f64>>> {
    if n == 0 {
        return Err(GeometryError::InvalidParameter("direction grid needs n >= 1".into()));
    }
    match dim {
        2 => Ok((0..n)
            .map(|k| {
                let a = std::f64::consts::TAU * k as f64 / n as f64;
                vec![a.cos(), a.sin()]
            })
            .collect()),
        3 => Ok(fibonacci_sphere(n)),
        _ => Err(GeometryError::Unsupported(format!(
            "direction grids exist for d = 2, 3 only (got {dim})"
        ))),
    }
}

pub fn fibonacci_sphere(n: usize) -> Vec<Vec<f64>> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|k| {
            let z = 1.0 - (2.0 * k as f64 + 1.0) / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden * k as f64;
            vec![r * phi.cos(), r * phi.sin(), z]
        })
        .collect()
}

/// Rough angular spacing of an `n`-point grid on S^{d-1}.
pub fn grid_spacing(dim: usize, n: usize) -> f64 {
    match dim {
        2 => std::f64::consts::TAU / n as f64,
        _ => (4.0 * std::f64::consts::PI / n as f64).sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_are_unit() {
        for d in [2, 3] {
            for v in direction_grid(d, 97).unwrap() {
                let n: f64 = v.iter().map(|c| c * c).sum();
                assert!((n - 1.0).abs() < 1e-14);
            }
        }
        assert!(direction_grid(4, 10).is_err());
    }

    #[test]
    fn fibonacci_covers_sphere() {
        // Every probe direction has a grid point within a few spacings.
        let g = fibonacci_sphere(500);
        let h = grid_spacing(3, 500);
        for p in fibonacci_sphere(37) {
            let best = g
                .iter()
                .map(|q| (q[0] * p[0] + q[1] * p[1] + q[2] * p[2]).clamp(-1.0, 1.0).acos())
                .fold(f64::INFINITY, f64::min);
            assert!(best < h);
        }
    }
}
