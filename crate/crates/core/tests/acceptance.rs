//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Run with `cargo test -p hypwidth --test acceptance -- --nocapture` to see them.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use hypwidth::body::{pencil_support, BallIntersection, Polytope, Side};
use hypwidth::constructions::*;
use hypwidth::lorentz::*;
use hypwidth::metrology::*;
use hypwidth::EPS_CONTACT;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, name: &str, ok: bool, detail: String) {
    println!("{} criterion {id:>2} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} ({name}) failed: {detail}");
}

fn within(start: Instant, limit: Duration) -> bool {
    start.elapsed() < limit
}

#[test]
fn c01_simplex_width_formulas_match_measurement() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for x in [0.25, 0.5, 1.0, 1.5] {
        let s = make_regular_tetrahedron(x).unwrap();
        let facet = width_h(&s, &tetrahedron_facet_plane(&s).unwrap()).unwrap().value;
        let edge = width_h(&s, &tetrahedron_edge_plane(&s).unwrap()).unwrap().value;
        worst = worst.max((facet - simplex_facet_width(x)).abs());
        worst = worst.max((edge - simplex_edge_width(x)).abs());
    }
    let fast = within(start, Duration::from_secs(1));
    report(
        1,
        "facet and edge widths of the regular tetrahedron",
        worst <= 1e-6 && fast,
        format!("max deviation {worst:.3e} (tol 1e-6), {:?}", start.elapsed()),
    );
}

#[test]
fn c02_tetrahedron_is_not_reduced() {
    let start = Instant::now();
    let (r1, r2) = remark2_roots();
    let roots_ok = (r1 - 7.0 / 29.0).abs() <= 1e-12 && (r2 - 1.0).abs() <= 1e-12;
    let positive = [1.01, 2.0, 10.0].iter().all(|&l| remark2_polynomial(l) > 0.0);
    let smaller = [0.25, 0.5, 1.0, 2.0, 4.0]
        .iter()
        .all(|&x| simplex_edge_width(x) < simplex_facet_width(x));
    let ratio = simplex_edge_width(8.0) / simplex_facet_width(8.0);
    let s = make_regular_tetrahedron(1.0).unwrap();
    let witness = reducedness_falsifier(&s, &FalsifierParams::default()).unwrap();
    let fast = within(start, Duration::from_secs(30));
    let detail = format!(
        "roots ({r1:.15}, {r2:.15}), positive {positive}, edge<facet {smaller}, ratio(8) {ratio:.10}, witness {}, {:?}",
        witness
            .as_ref()
            .map(|w| format!("vertex {} depth {:.3e} thickness {:.12} vs {:.12}", w.vertex, w.offset, w.thickness, w.original_thickness))
            .unwrap_or_else(|| "none".into()),
        start.elapsed()
    );
    report(
        2,
        "tetrahedron width comparison and non-reducedness witness",
        roots_ok && positive && smaller && (ratio - 1.0).abs() <= 0.05 && witness.is_some() && fast,
        detail,
    );
}

#[test]
fn c03_max_width_equals_diameter() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst: f64 = 0.0;
    let opts = SearchOptions::default();
    for (dim, count, max_v) in [(2, 50, 12), (3, 20, 10)] {
        for _ in 0..count {
            let n = rng.gen_range(dim + 2..=max_v);
            let c = random_polytope(&mut rng, dim, n).unwrap();
            let mw = max_width(&c, &opts).unwrap().value;
            worst = worst.max((mw - diameter(&c).value).abs());
        }
    }
    let fast = within(start, Duration::from_secs(60));
    report(
        3,
        "max width equals diameter on 70 random polytopes",
        worst <= 2e-3 && fast,
        format!("max |maxwidth - diam| {worst:.3e} (tol 2e-3), {:?}", start.elapsed()),
    );
}

struct Battery {
    width: CheckReport,
    diameter: CheckReport,
    complete: CheckReport,
    strict: CheckReport,
}

fn battery(c: &Polytope, delta: f64, tol: f64) -> Battery {
    let opts = SearchOptions::default();
    Battery {
        width: check_constant_width(c, delta, tol, &opts).unwrap(),
        diameter: check_constant_diameter(c, delta, tol, 720).unwrap(),
        complete: check_complete(c, delta, tol, 720).unwrap(),
        strict: check_strict_convexity(c, tol, &opts).unwrap(),
    }
}

impl Battery {
    fn all(&self) -> [&CheckReport; 4] {
        [&self.width, &self.diameter, &self.complete, &self.strict]
    }

    fn summary(&self) -> String {
        let s: Vec<String> = self.all().iter().map(|r| format!("{:.2e}", r.spread)).collect();
        format!("spreads [{}]", s.join(", "))
    }
}

#[test]
fn c04_constant_width_suite() {
    let start = Instant::now();
    let tol = 2e-3;
    let ball = make_ball(HPoint::origin(2), 1.0).unwrap().discretize(4096).unwrap().polytope;
    let r3 = make_reuleaux(3, 1.0).unwrap().discretize(720).unwrap().polytope;
    let r5 = make_reuleaux(5, 1.0).unwrap().discretize(720).unwrap().polytope;
    let tri = make_regular_triangle(1.0).unwrap();
    let b_ball = battery(&ball, 2.0, tol);
    let b_r3 = battery(&r3, 1.0, tol);
    let b_r5 = battery(&r5, 1.0, tol);
    let b_tri = battery(&tri, 2.0, tol);
    let pass = |b: &Battery| b.all().iter().all(|r| r.passed);
    let fail_with_witness = |b: &Battery| b.all().iter().all(|r| !r.passed && r.worst_witness.is_some());
    let ok = pass(&b_ball) && pass(&b_r3) && pass(&b_r5) && fail_with_witness(&b_tri);
    let fast = within(start, Duration::from_secs(60));
    report(
        4,
        "ball and Reuleaux 3/5 pass, triangle fails all four checks",
        ok && fast,
        format!(
            "ball {}, reuleaux3 {}, reuleaux5 {}, triangle {}, {:?}",
            b_ball.summary(),
            b_r3.summary(),
            b_r5.summary(),
            b_tri.summary(),
            start.elapsed()
        ),
    );
}

#[test]
fn c05_ball_orthant_thickness_is_radius() {
    let opts = SearchOptions::default();
    let q2 = make_ball_orthant(1.0, 2, 400).unwrap();
    let q3 = make_ball_orthant(1.0, 3, 600).unwrap();
    let t2 = thickness(&q2, &opts).unwrap().value;
    let t3 = thickness(&q3, &opts).unwrap().value;
    report(
        5,
        "thickness of the quarter disk and the ball octant",
        (t2 - 1.0).abs() <= 1e-3 && (t3 - 1.0).abs() <= 2e-3,
        format!("d=2 {t2:.6} (tol 1e-3), d=3 {t3:.6} (tol 2e-3)"),
    );
}

#[test]
fn c06_projection_feet_leave_the_contact_set() {
    let e = make_example1(1.0, PI / 3.0, 200).unwrap();
    let opts = SearchOptions::default();
    let th = thickness(&e.body, &opts).unwrap().value;
    let w = width_h(&e.body, &e.h).unwrap().value;
    let mut min_off = f64::INFINITY;
    for (i, p) in e.arc.iter().enumerate() {
        if i != e.midpoint {
            min_off = min_off.min(e.h.project(p).distance(&e.a));
        }
    }
    let mid = e.h.project(&e.arc[e.midpoint]).distance(&e.a);
    report(
        6,
        "equidistant-arc body: thickness = width = rho, feet off the contact point",
        (th - 1.0).abs() <= 1e-3 && (w - 1.0).abs() <= 1e-3 && min_off > 10.0 * EPS_CONTACT && mid <= 1e-9,
        format!("thickness {th:.9}, width {w:.9}, nearest off-foot {min_off:.3e}, midpoint foot {mid:.1e}"),
    );
}

fn random_point<R: Rng>(rng: &mut R, dim: usize, spread: f64) -> HPoint {
    let x: Vec<f64> = (0..dim).map(|_| rng.gen_range(-spread..spread)).collect();
    HPoint::from_spatial(&x).unwrap()
}

fn random_direction<R: Rng>(rng: &mut R, base: &HPoint) -> UnitTangent {
    let frame = TangentFrame::canonical(base);
    loop {
        let a: Vec<f64> = (0..base.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        if a.iter().map(|c| c * c).sum::<f64>() > 1e-3 {
            return frame.direction(&a).unwrap();
        }
    }
}

#[test]
fn c07_lemma_and_claim_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 1000;
    let mut violations = [0usize; 5];

    for i in 0..n {
        let dim = 2 + i % 2;
        // Foot of the perpendicular is the nearest point of the hyperplane.
        let p = random_point(&mut rng, dim, 2.0);
        let q = random_point(&mut rng, dim, 1.0);
        let h = Hyperplane::orthogonal_at(&random_direction(&mut rng, &q));
        let foot = h.project(&p);
        let base = foot.distance(&p);
        for _ in 0..5 {
            let k = geodesic_point(&random_direction(&mut rng, &q), rng.gen_range(-3.0..3.0));
            let k = h.project(&k);
            if k.distance(&foot) > 1e-9 && k.distance(&p) <= base {
                violations[0] += 1;
            }
        }

        // Beyond one of two ultraparallel hyperplanes, the nearer one is closer.
        let dir = random_direction(&mut rng, &q);
        let p = random_point(&mut rng, dim, 2.0);
        let tp = pencil_param(&dir, &p);
        let a = tp + rng.gen_range(0.01..1.5);
        let b = a + rng.gen_range(0.01..1.5);
        let (ha, hb) = (pencil_hyperplane(&dir, a), pencil_hyperplane(&dir, b));
        let (da, db) = (ha.signed_distance(&p).abs(), hb.signed_distance(&p).abs());
        if !(da < db) {
            violations[1] += 1;
        }

        // The hyperplane at the farthest point orthogonal to its perpendicular
        // supports the body there, touching only it when it is the unique maximizer.
        let count = rng.gen_range(dim + 2..=10);
        let c = random_polytope(&mut rng, dim, count).unwrap();
        let dir = random_direction(&mut rng, c.interior_reference());
        let side = if rng.gen_bool(0.5) { Side::Plus } else { Side::Minus };
        let s = pencil_support(&c, &dir).unwrap();
        let w = width_h(&c, s.hyperplane(side)).unwrap();
        let sd: Vec<f64> = c.vertices().iter().map(|v| w.far_hyperplane.signed_distance(v)).collect();
        if sd.iter().any(|&d| d < -1e-9) || sd[w.far_index].abs() > 1e-9 {
            violations[2] += 1;
        }
        let mut hd: Vec<f64> = c.vertices().iter().map(|v| s.hyperplane(side).signed_distance(v)).collect();
        hd.sort_by(|x, y| y.total_cmp(x));
        if hd[0] - hd[1] > 1e-9 {
            let contacts = sd.iter().filter(|&&d| d <= EPS_CONTACT).count();
            if contacts != 1 {
                violations[3] += 1;
            }
        }

        // The body lies in the strip orthogonal to a diameter at its ends.
        if !verify_diameter_strip(&c) {
            violations[4] += 1;
        }
    }
    report(
        7,
        "foot minimality, strip monotonicity, farthest-point support, single contact, diameter strip",
        violations.iter().all(|&v| v == 0),
        format!("{n} instances each, violations {violations:?}"),
    );
}

#[test]
fn c08_completion_chain() {
    let delta = 1.0;
    let tol = 2e-3;
    let params = CompletionParams::default();
    let o = HPoint::origin(2);
    let dir = TangentFrame::canonical(&o).direction(&[1.0, 0.0]).unwrap();
    let pair = [geodesic_point(&dir, -0.5), geodesic_point(&dir, 0.5)];
    let c2 = complete_hull(&pair, delta, &params).unwrap();
    let r = make_reuleaux(3, delta).unwrap();
    let c3 = complete_hull(r.centers(), delta, &params).unwrap();
    let mut lines = Vec::new();
    let mut ok = true;
    for (name, comp) in [("pair", &c2), ("reuleaux vertices", &c3)] {
        let p = comp.body.discretize(720).unwrap().polytope;
        let complete = check_complete(&p, delta, tol, 720).unwrap();
        let cdiam = check_constant_diameter(&p, delta, tol, 720).unwrap();
        ok &= complete.passed && cdiam.passed;
        lines.push(format!(
            "{name}: {} centers, complete {:.2e}, constant diameter {:.2e}",
            comp.body.centers().len(),
            complete.spread,
            cdiam.spread
        ));
    }
    let hd = radial_hausdorff(&c3.body, &r, 2048).unwrap();
    ok &= hd <= tol;
    report(
        8,
        "greedy completions are complete and of constant diameter",
        ok,
        format!("{}; Hausdorff to Reuleaux {hd:.2e}", lines.join("; ")),
    );
}

fn ball_fixture(n: usize) -> Polytope {
    BallIntersection::ball(HPoint::from_spatial(&[0.2, -0.1]).unwrap(), 0.9)
        .unwrap()
        .discretize(n)
        .unwrap()
        .polytope
}

#[test]
fn c09_isometry_equivariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let opts = SearchOptions::default();
    let fixtures: Vec<(&str, Polytope)> = vec![
        ("triangle", make_regular_triangle(1.0).unwrap()),
        ("tetrahedron", make_regular_tetrahedron(1.0).unwrap()),
        ("reuleaux", make_reuleaux(3, 1.0).unwrap().discretize(60).unwrap().polytope),
        ("ball", ball_fixture(90)),
        ("random", random_polytope(&mut rng, 3, 9).unwrap()),
    ];
    let mut worst: f64 = 0.0;
    for (_, c) in &fixtures {
        let dir = c.intrinsic_frame().direction(&vec![1.0; c.dim()]).unwrap();
        let h = pencil_support(c, &dir).unwrap().h_plus;
        let w0 = width_h(c, &h).unwrap().value;
        let t0 = thickness(c, &opts).unwrap().value;
        let d0 = diameter(c).value;
        for _ in 0..10 {
            let g = Isometry::random(&mut rng, c.dim(), 1.5);
            let gc = c.transformed(&g);
            let w1 = width_h(&gc, &g.apply_hyperplane(&h)).unwrap().value;
            let t1 = thickness(&gc, &opts).unwrap().value;
            let d1 = diameter(&gc).value;
            worst = worst.max((w1 - w0).abs()).max((t1 - t0).abs()).max((d1 - d0).abs());
        }
    }
    report(
        9,
        "width, thickness and diameter invariant under 10 isometries per fixture",
        worst <= 1e-9,
        format!("{} fixtures, max deviation {worst:.3e} (tol 1e-9)", fixtures.len()),
    );
}

#[test]
fn c10_farthest_hyperplane_is_not_symmetric() {
    let t = make_regular_triangle(1.0).unwrap();
    let h = triangle_side_line(&t).unwrap();
    let j = width_h(&t, &h).unwrap().far_hyperplane;
    let k = width_h(&t, &j).unwrap().far_hyperplane;
    let angle = match h.angle_with(&k) {
        Some(a) => a,
        None => f64::INFINITY,
    };
    let relation = format!("{:?}", h.relation(&k));
    report(
        10,
        "the farthest supporting hyperplane of the farthest one is not the original",
        angle > 0.1,
        format!("relation {relation}, angle between H and K {angle:.6} rad"),
    );
}
