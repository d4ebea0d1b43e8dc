use std::f64::consts::PI;

use clap::ValueEnum;
use hypwidth::body::{Polytope, Side};
use hypwidth::constructions::*;
use hypwidth::lorentz::{from_klein, HPoint, Hyperplane, LorentzVector, TangentFrame};
use hypwidth::metrology::*;
use hypwidth::EPS_CONTACT;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::*;
use crate::document::{load_body, Body, BodyDocument, Coords};
use crate::error::CliError;
use crate::report::{GridInfo, ReportDocument, WitnessDoc};

/// A body ready for measurement: ball intersections are replaced by an
/// inscribed polytope within `bound` of the original.
pub struct Prepared {
    pub source: Body,
    pub polytope: Polytope,
    pub bound: f64,
    pub samples: Option<usize>,
}

const MAX_ARC_SAMPLES: usize = 8192;
const SPACE_RAYS: usize = 4000;

/// Discretizes ball intersections. Without an explicit sample count planar
/// arcs are refined until the Hausdorff bound is at most `tol / 4` and, when
/// `short_edges` is set, no edge is longer than `tol / 2`, so that contact
/// sets of the inscribed polygon stay below `tol` as well.
pub fn prepare(body: Body, discretize: Option<usize>, tol: f64, short_edges: bool) -> Result<Prepared, CliError> {
    let balls = match &body {
        Body::Polytope(p) => {
            let polytope = p.clone();
            return Ok(Prepared {
                source: body,
                polytope,
                bound: 0.0,
                samples: None,
            });
        }
        Body::Balls(b) => b,
    };
    let (disc, n) = match (discretize, balls.dim()) {
        (Some(n), _) => (balls.discretize(n)?, n),
        (None, 2) => {
            let mut n = 90;
            loop {
                let d = balls.discretize(n)?;
                // The bound shrinks like n^-2 and the edges like n^-1.
                let mut excess = (d.hausdorff_bound / (tol / 4.0)).sqrt();
                if short_edges {
                    excess = excess.max(longest_edge(&d.polytope)? / (tol / 2.0));
                }
                if excess <= 1.0 || n >= MAX_ARC_SAMPLES {
                    break (d, n);
                }
                n = ((n as f64 * excess * 1.05).ceil() as usize).clamp(n + 1, MAX_ARC_SAMPLES);
            }
        }
        (None, _) => (balls.discretize(SPACE_RAYS)?, SPACE_RAYS),
    };
    Ok(Prepared {
        polytope: disc.polytope,
        bound: disc.hausdorff_bound,
        samples: Some(n),
        source: body,
    })
}

fn longest_edge(p: &Polytope) -> Result<f64, CliError> {
    let cycle = p.boundary_cycle()?;
    let n = cycle.len();
    Ok((0..n)
        .map(|k| p.vertex(cycle[k]).distance(p.vertex(cycle[(k + 1) % n])))
        .fold(0.0, f64::max))
}

fn load(opts: &BodyOpts, tol: f64, short_edges: bool) -> Result<Prepared, CliError> {
    prepare(load_body(&opts.body)?, opts.discretize, tol, short_edges)
}

fn search_options(g: &GlobalOpts) -> SearchOptions {
    let mut o = SearchOptions::default().with_refine_iters(g.refine_iters);
    o.grid = g.grid;
    o
}

fn body_inputs(r: &mut ReportDocument, opts: &BodyOpts, p: &Prepared) {
    r.input("body", opts.body.display().to_string());
    r.input("dim", p.polytope.dim());
    r.input("vertices", p.polytope.len());
    if let Some(n) = p.samples {
        r.input("discretization_samples", n);
        r.tolerance("discretization_bound", p.bound);
    }
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Minus => "minus",
        Side::Plus => "plus",
    }
}

pub fn make(g: &GlobalOpts, a: &MakeArgs) -> Result<BodyDocument, CliError> {
    let body = match a.shape {
        Shape::Ball => {
            let center = match &a.center {
                Some(c) => {
                    if c.len() != a.dim {
                        return Err(CliError::input(format!(
                            "center has {} coordinates, expected {}",
                            c.len(),
                            a.dim
                        )));
                    }
                    from_klein(c)?
                }
                None => HPoint::origin(a.dim),
            };
            Body::Balls(make_ball(center, a.rho)?)
        }
        Shape::Orthant => {
            let n = a.n.unwrap_or(if a.dim == 2 { 400 } else { 600 });
            Body::Polytope(make_ball_orthant(a.rho, a.dim, n)?)
        }
        Shape::Triangle => Body::Polytope(make_regular_triangle(a.x)?),
        Shape::Tetrahedron => Body::Polytope(make_regular_tetrahedron(a.x)?),
        Shape::Reuleaux => Body::Balls(make_reuleaux(a.k, a.delta)?),
        Shape::Example1 => Body::Polytope(make_example1(a.rho, a.theta, a.n.unwrap_or(200))?.body),
        Shape::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
            Body::Polytope(random_polytope(&mut rng, a.dim, a.n.unwrap_or(8))?)
        }
    };
    let coords = match a.coords {
        CoordsArg::Klein => Coords::Klein,
        CoordsArg::Hyperboloid => Coords::Hyperboloid,
    };
    Ok(BodyDocument::from_body(&body, coords))
}

fn width_witnesses(r: &mut ReportDocument, w: &WidthReport) {
    r.witness(WitnessDoc::hyperplane("hyperplane", &w.hyperplane));
    r.witness(WitnessDoc::point("far_point", &w.far_point));
    r.witness(WitnessDoc::point("foot", &w.foot()));
}

fn extremal(r: &mut ReportDocument, c: &Polytope, e: &ExtremalWidth, g: &GlobalOpts) -> Result<(), CliError> {
    r.value("side", side_name(e.side));
    r.value("frame_direction", e.frame_coords.clone());
    r.grid = Some(GridInfo::of(e, g.refine_iters));
    width_witnesses(r, &width_h(c, &e.hyperplane)?);
    Ok(())
}

pub fn measure(g: &GlobalOpts, a: &MeasureArgs) -> Result<ReportDocument, CliError> {
    let p = load(&a.body, g.tol, false)?;
    let c = &p.polytope;
    let opts = search_options(g);
    let mut r = ReportDocument::new("measure");
    body_inputs(&mut r, &a.body, &p);
    match a.measure {
        Measure::Width => {
            r.input("measure", "width");
            let w = match (&a.normal, &a.pencil) {
                (Some(n), _) => {
                    r.input("normal", n.clone());
                    let h = Hyperplane::new(LorentzVector::new(n.clone())?)?.oriented_toward(c.interior_reference());
                    width_h(c, &h)?
                }
                (None, Some(dir)) => {
                    let side = match a.side {
                        SideArg::Plus => Side::Plus,
                        SideArg::Minus => Side::Minus,
                    };
                    r.input("pencil", dir.clone());
                    r.input("side", side_name(side));
                    let frame = TangentFrame::canonical(c.interior_reference());
                    width_in_direction(c, &frame.direction(dir)?, side)?
                }
                (None, None) => return Err(CliError::input("width needs --normal or --pencil")),
            };
            r.value("width", w.value);
            width_witnesses(&mut r, &w);
        }
        Measure::Thickness => {
            r.input("measure", "thickness");
            let th = thickness(c, &opts)?;
            r.value("thickness", th.value);
            extremal(&mut r, c, &th, g)?;
        }
        Measure::Maxwidth => {
            r.input("measure", "maxwidth");
            let mx = max_width(c, &opts)?;
            r.value("max_width", mx.value);
            extremal(&mut r, c, &mx, g)?;
        }
        Measure::Diameter => {
            r.input("measure", "diameter");
            let d = diameter(c);
            r.value("diameter", d.value);
            r.witness(WitnessDoc::point("a", &d.a));
            r.witness(WitnessDoc::point("b", &d.b));
        }
    }
    Ok(r)
}

fn check_report(r: &mut ReportDocument, c: &CheckReport) {
    r.value("target", c.target);
    r.value("spread", c.spread);
    for (k, v) in &c.details {
        r.value(k, *v);
    }
    r.tolerance("tol", c.tolerance);
    match &c.worst_witness {
        Some(Witness::Point(p)) => {
            r.witness(WitnessDoc::point("worst", p));
        }
        Some(Witness::Direction { hyperplane, side, .. }) => {
            r.value("worst_side", side_name(*side));
            r.witness(WitnessDoc::hyperplane("worst", hyperplane));
        }
        Some(Witness::Contact { hyperplane, points }) => {
            r.witness(WitnessDoc::hyperplane("worst", hyperplane));
            for (i, p) in points.iter().enumerate() {
                r.witness(WitnessDoc::point(&format!("contact_{i}"), p));
            }
        }
        None => {}
    }
    r.passed = Some(c.passed);
}

pub fn check(g: &GlobalOpts, a: &CheckArgs) -> Result<ReportDocument, CliError> {
    let p = load(&a.body, g.tol, a.check == Check::StrictlyConvex)?;
    let c = &p.polytope;
    let opts = search_options(g);
    let mut r = ReportDocument::new("check");
    body_inputs(&mut r, &a.body, &p);
    let name = a.check.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    r.input("check", name);
    let delta = match a.delta {
        Some(d) => d,
        None => diameter(c).value,
    };
    match a.check {
        Check::ConstantWidth => {
            r.input("delta", delta);
            check_report(&mut r, &check_constant_width(c, delta, g.tol, &opts)?);
        }
        Check::ConstantDiameter => {
            r.input("delta", delta);
            r.input("samples", a.samples);
            check_report(&mut r, &check_constant_diameter(c, delta, g.tol, a.samples)?);
        }
        Check::Complete => {
            r.input("delta", delta);
            r.input("samples", a.samples);
            check_report(&mut r, &check_complete(c, delta, g.tol, a.samples)?);
        }
        Check::StrictlyConvex => {
            check_report(&mut r, &check_strict_convexity(c, g.tol, &opts)?);
        }
        Check::ReducedFalsify => {
            let params = FalsifierParams {
                search: opts,
                ..FalsifierParams::default()
            };
            let found = reducedness_falsifier(c, &params)?;
            r.value("witness_found", found.is_some());
            if let Some(w) = &found {
                r.value("thickness", w.original_thickness);
                r.value("truncated_thickness", w.thickness);
                r.value("truncation_offset", w.offset);
                r.witness(WitnessDoc::point("truncated_vertex", c.vertex(w.vertex)));
            }
            r.tolerance("contact", EPS_CONTACT);
            r.passed = Some(found.is_none());
        }
        Check::Theorem1 => {
            let mx = max_width(c, &opts)?;
            let d = diameter(c);
            let gap = (mx.value - d.value).abs();
            r.value("max_width", mx.value);
            r.value("diameter", d.value);
            r.value("gap", gap);
            r.tolerance("tol", g.tol);
            r.grid = Some(GridInfo::of(&mx, g.refine_iters));
            r.witness(WitnessDoc::hyperplane("max_width_hyperplane", &mx.hyperplane));
            r.witness(WitnessDoc::point("a", &d.a));
            r.witness(WitnessDoc::point("b", &d.b));
            r.passed = Some(gap <= g.tol);
        }
        Check::Theorem2 => {
            let params = Theorem2Params {
                search: opts,
                ..Theorem2Params::default()
            };
            r.tolerance("foot_gap", params.tol);
            r.tolerance("contact", params.contact_tol);
            r.tolerance("unique", params.unique_tol);
            match theorem2_check(c, &params)? {
                Theorem2Outcome::Holds { foot_gap, far_point, foot } => {
                    r.value("status", "holds").value("foot_gap", foot_gap);
                    r.witness(WitnessDoc::point("far_point", &far_point));
                    r.witness(WitnessDoc::point("foot", &foot));
                    r.passed = Some(true);
                }
                Theorem2Outcome::Violated { foot_gap, far_point, foot } => {
                    r.value("status", "violated").value("foot_gap", foot_gap);
                    r.witness(WitnessDoc::point("far_point", &far_point));
                    r.witness(WitnessDoc::point("foot", &foot));
                    r.passed = Some(false);
                }
                Theorem2Outcome::Inapplicable { margin } => {
                    r.value("status", "inapplicable").value("margin", margin);
                    r.passed = Some(true);
                }
            }
        }
        Check::Claim1 => {
            let (lo, hi, len) = diameter_strip_range(c)?;
            let d = diameter(c);
            r.value("min_param", lo).value("max_param", hi).value("diameter", len);
            r.tolerance("strip", 1e-9);
            r.witness(WitnessDoc::point("a", &d.a));
            r.witness(WitnessDoc::point("b", &d.b));
            r.passed = Some(verify_diameter_strip(c));
        }
    }
    Ok(r)
}

const DEFAULT_TABLE_X: [f64; 7] = [0.25, 0.5, 1.0, 1.5, 2.0, 4.0, 8.0];
const FORMULA_TOL: f64 = 1e-6;

fn simplex_table(xs: &[f64]) -> Result<ReportDocument, CliError> {
    let mut r = ReportDocument::new("paper simplex-table");
    r.input("x", xs.to_vec());
    r.tolerance("formula", FORMULA_TOL);
    let mut passed = true;
    let mut rows = Vec::new();
    for &x in xs {
        let s = make_regular_tetrahedron(x)?;
        let (f, e) = (simplex_facet_width(x), simplex_edge_width(x));
        let fm = width_h(&s, &tetrahedron_facet_plane(&s)?)?.value;
        let em = width_h(&s, &tetrahedron_edge_plane(&s)?)?.value;
        let ok = (f - fm).abs() <= FORMULA_TOL && (e - em).abs() <= FORMULA_TOL && e < f;
        passed &= ok;
        rows.push(json!({
            "x": x,
            "facet_width": f,
            "edge_width": e,
            "facet_width_measured": fm,
            "edge_width_measured": em,
            "difference": f - e,
            "ratio": e / f,
            "edge_below_facet": e < f,
            "agrees": ok,
        }));
    }
    r.value("rows", Value::Array(rows));
    r.passed = Some(passed);
    Ok(r)
}

fn remark2() -> ReportDocument {
    let mut r = ReportDocument::new("paper remark2");
    let (a, b) = remark2_roots();
    r.value("polynomial", "29 l^2 - 36 l + 7");
    r.value("roots", vec![a, b]);
    let probes = [1.01, 2.0, 10.0];
    r.value("probes", probes.to_vec());
    r.value("values", probes.iter().map(|&l| remark2_polynomial(l)).collect::<Vec<f64>>());
    // Positive at every sample of (1, 100] as well.
    let dense = (1..=10_000).all(|i| remark2_polynomial(1.0 + 99.0 * i as f64 / 10_000.0) > 0.0);
    let positive = probes.iter().all(|&l| remark2_polynomial(l) > 0.0) && dense && b <= 1.0 + 1e-12;
    r.value("never_negative_above_one", positive);
    r.tolerance("roots", 1e-12);
    r.passed = Some(positive && (a - 7.0 / 29.0).abs() < 1e-12 && (b - 1.0).abs() < 1e-12);
    r
}

fn example1(g: &GlobalOpts) -> Result<ReportDocument, CliError> {
    let (rho, theta, n) = (1.0, PI / 3.0, 200);
    let mut r = ReportDocument::new("paper example1");
    r.input("rho", rho).input("theta", theta).input("n", n);
    let e = make_example1(rho, theta, n)?;
    let w = width_h(&e.body, &e.h)?.value;
    let th = thickness(&e.body, &search_options(g))?;
    let mid_foot = e.h.project(&e.arc[e.midpoint]).distance(&e.a);
    let off_gap = e
        .arc
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != e.midpoint)
        .map(|(_, p)| e.h.project(p).distance(&e.a))
        .fold(f64::INFINITY, f64::min);
    let angle = angle_at(&e.a, &e.arc[0], e.arc.last().expect("arc is nonempty"))?;
    r.value("width_h", w).value("thickness", th.value);
    r.value("angle_bac", angle);
    r.value("midpoint_foot_offset", mid_foot);
    r.value("min_off_midpoint_foot_gap", off_gap);
    r.tolerance("tol", g.tol).tolerance("midpoint", 1e-9).tolerance("off_midpoint", 10.0 * EPS_CONTACT);
    r.grid = Some(GridInfo::of(&th, g.refine_iters));
    r.witness(WitnessDoc::hyperplane("h", &e.h));
    r.witness(WitnessDoc::point("a", &e.a));
    r.witness(WitnessDoc::point("arc_start", &e.arc[0]));
    r.witness(WitnessDoc::point("arc_end", e.arc.last().expect("arc is nonempty")));
    r.passed = Some(
        (w - rho).abs() <= g.tol
            && (th.value - rho).abs() <= g.tol
            && mid_foot <= 1e-9
            && off_gap > 10.0 * EPS_CONTACT
            && angle >= PI / 2.0,
    );
    Ok(r)
}

fn theorem3_chain(g: &GlobalOpts) -> Result<ReportDocument, CliError> {
    let delta = 1.0;
    let mut r = ReportDocument::new("paper theorem3-chain");
    r.input("delta", delta);
    r.tolerance("tol", g.tol);
    let fixtures: Vec<(&str, Body)> = vec![
        ("ball", Body::Balls(make_ball(HPoint::origin(2), delta / 2.0)?)),
        ("reuleaux3", Body::Balls(make_reuleaux(3, delta)?)),
        ("reuleaux5", Body::Balls(make_reuleaux(5, delta)?)),
    ];
    let opts = search_options(g);
    let mut passed = true;
    let mut rows = Vec::new();
    for (name, body) in fixtures {
        let p = prepare(body, None, g.tol, false)?;
        let c = &p.polytope;
        let cw = check_constant_width(c, delta, g.tol, &opts)?;
        let cd = check_constant_diameter(c, delta, g.tol, 720)?;
        let cc = check_complete(c, delta, g.tol, 720)?;
        let ok = cw.passed && cd.passed && cc.passed;
        passed &= ok;
        rows.push(json!({
            "fixture": name,
            "discretization_bound": p.bound,
            "constant_width": { "passed": cw.passed, "spread": cw.spread },
            "constant_diameter": { "passed": cd.passed, "spread": cd.spread },
            "complete": { "passed": cc.passed, "spread": cc.spread },
        }));
    }
    r.value("fixtures", Value::Array(rows));
    r.passed = Some(passed);
    Ok(r)
}

pub fn paper(g: &GlobalOpts, a: &PaperArgs) -> Result<ReportDocument, CliError> {
    match a.report {
        PaperReport::SimplexTable => simplex_table(a.x.as_deref().unwrap_or(&DEFAULT_TABLE_X)),
        PaperReport::Remark2 => Ok(remark2()),
        PaperReport::Example1 => example1(g),
        PaperReport::Theorem3Chain => theorem3_chain(g),
    }
}
