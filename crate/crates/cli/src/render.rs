use std::fmt::Write as _;

use hypwidth::lorentz::{to_poincare, HPoint, Hyperplane};
use hypwidth::metrology::{thickness, width_h, SearchOptions};

use crate::commands::Prepared;
use crate::document::Body;
use crate::error::CliError;

type P2 = [f64; 2];

/// Poincaré coordinates with the second axis flipped for SVG.
fn screen(p: &HPoint) -> P2 {
    let y = to_poincare(p);
    [y[0], -y[1]]
}

fn fmt(v: f64) -> String {
    let s = format!("{v:.9}");
    if s == "-0.000000000" {
        "0.000000000".into()
    } else {
        s
    }
}

fn cross(a: P2, b: P2, c: P2) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn circumcenter(a: P2, b: P2, c: P2) -> Option<P2> {
    let d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]));
    if d.abs() < 1e-12 {
        return None;
    }
    let (a2, b2, c2) = (a[0] * a[0] + a[1] * a[1], b[0] * b[0] + b[1] * b[1], c[0] * c[0] + c[1] * c[1]);
    Some([
        (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d,
        (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d,
    ])
}

/// Path segment from the current point `p` to `q` along the circle about
/// `center`, or a straight line when there is none.
fn arc_to(out: &mut String, p: P2, q: P2, center: Option<P2>) {
    match center {
        Some(c) => {
            let r = (c[0] - p[0]).hypot(c[1] - p[1]);
            let sweep = if cross(p, q, c) > 0.0 { 1 } else { 0 };
            let _ = write!(out, " A {} {} 0 0 {} {} {}", fmt(r), fmt(r), sweep, fmt(q[0]), fmt(q[1]));
        }
        None => {
            let _ = write!(out, " L {} {}", fmt(q[0]), fmt(q[1]));
        }
    }
}

/// Center of the circle through `p` and `q` orthogonal to the unit circle,
/// from the inversion of whichever point is farther from the origin.
fn geodesic_center(p: P2, q: P2) -> Option<P2> {
    let (np, nq) = (p[0] * p[0] + p[1] * p[1], q[0] * q[0] + q[1] * q[1]);
    let inv = if np >= nq {
        if np < 1e-24 {
            return None;
        }
        [p[0] / np, p[1] / np]
    } else {
        [q[0] / nq, q[1] / nq]
    };
    if cross(p, q, [0.0, 0.0]).abs() < 1e-12 {
        return None;
    }
    circumcenter(p, q, inv)
}

fn geodesic_path(p: &HPoint, q: &HPoint) -> String {
    let (a, b) = (screen(p), screen(q));
    let mut d = format!("M {} {}", fmt(a[0]), fmt(a[1]));
    arc_to(&mut d, a, b, geodesic_center(a, b));
    d
}

/// The whole hyperbolic line of `h`, between its two ideal points.
fn hyperplane_path(h: &Hyperplane) -> String {
    let n = h.normal();
    let s = n.spatial();
    let norm = s[0].hypot(s[1]);
    let (a, c) = ([s[0] / norm, s[1] / norm], n.time() / norm);
    let half = (1.0 - c * c).max(0.0).sqrt();
    let foot = [c * a[0], c * a[1]];
    let i1 = [foot[0] - half * a[1], -(foot[1] + half * a[0])];
    let i2 = [foot[0] + half * a[1], -(foot[1] - half * a[0])];
    let dot = i1[0] * i2[0] + i1[1] * i2[1];
    let center = if c.abs() < 1e-12 {
        None
    } else {
        Some([(i1[0] + i2[0]) / (1.0 + dot), (i1[1] + i2[1]) / (1.0 + dot)])
    };
    let mut d = format!("M {} {}", fmt(i1[0]), fmt(i1[1]));
    arc_to(&mut d, i1, i2, center);
    d
}

fn outline(p: &Prepared) -> Result<String, CliError> {
    let c = &p.polytope;
    let cycle = c.boundary_cycle()?;
    let pts: Vec<P2> = cycle.iter().map(|&i| screen(c.vertex(i))).collect();
    let mut d = format!("M {} {}", fmt(pts[0][0]), fmt(pts[0][1]));
    for k in 0..pts.len() {
        let (a, b) = (pts[k], pts[(k + 1) % pts.len()]);
        match p.source {
            Body::Polytope(_) => arc_to(&mut d, a, b, geodesic_center(a, b)),
            Body::Balls(_) => {
                if k + 1 < pts.len() {
                    arc_to(&mut d, a, b, None);
                }
            }
        }
    }
    d.push_str(" Z");
    Ok(d)
}

pub struct RenderOptions {
    pub show_hyperplane: bool,
    pub show_width_segment: bool,
    pub search: SearchOptions,
}

/// SVG 1.1 picture of a planar body in the Poincaré disk.
pub fn render(p: &Prepared, opts: &RenderOptions) -> Result<String, CliError> {
    if p.polytope.dim() != 2 {
        return Err(CliError::unsupported("render supports d=2 only"));
    }
    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-1.05 -1.05 2.1 2.1\" width=\"600\" height=\"600\">\n",
    );
    svg.push_str("  <circle id=\"boundary\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" stroke-width=\"0.004\"/>\n");
    let _ = writeln!(
        svg,
        "  <path id=\"body\" d=\"{}\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#08519c\" stroke-width=\"0.004\"/>",
        outline(p)?
    );
    if opts.show_hyperplane || opts.show_width_segment {
        let th = thickness(&p.polytope, &opts.search)?;
        let w = width_h(&p.polytope, &th.hyperplane)?;
        if opts.show_hyperplane {
            let _ = writeln!(
                svg,
                "  <path id=\"thickness-hyperplane\" d=\"{}\" fill=\"none\" stroke=\"#cb181d\" stroke-width=\"0.004\"/>",
                hyperplane_path(&th.hyperplane)
            );
        }
        if opts.show_width_segment {
            let _ = writeln!(
                svg,
                "  <path id=\"width-segment\" d=\"{}\" fill=\"none\" stroke=\"#238b45\" stroke-width=\"0.006\"/>",
                geodesic_path(&w.far_point, &w.foot())
            );
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
