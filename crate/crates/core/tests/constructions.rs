use std::f64::consts::PI;

use hypwidth::constructions::*;
use hypwidth::lorentz::*;
use hypwidth::metrology::*;
use hypwidth::GeometryError;

fn pairwise(points: &[HPoint]) -> Vec<f64> {
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            out.push(points[i].distance(&points[j]));
        }
    }
    out
}

#[test]
fn triangle_formulas() {
    assert!(triangle_height(1e-6) < 1e-5);
    assert!((triangle_height(1.0) - 1.5393801825068164).abs() < 1e-14);
    for x in [0.3, 1.0, 2.5] {
        let eta = triangle_height(x);
        assert!(((2.0 * x).cosh() / (x.cosh() * eta.cosh()) - 1.0).abs() < 1e-12);
    }
    assert!((triangle_circumradius(1e-6) / 1e-6 - (4.0f64 / 3.0).sqrt()).abs() < 1e-6);
    assert!((triangle_circumradius(1.0) - 1.1127353046130539).abs() < 1e-14);
}

#[test]
fn regular_triangle_construction() {
    for x in [0.7, 1.0] {
        let t = make_regular_triangle(x).unwrap();
        for d in pairwise(t.vertices()) {
            assert!((d - 2.0 * x).abs() < 1e-10);
        }
        let o = HPoint::origin(2);
        for v in t.vertices() {
            assert!((v.distance(&o) - triangle_circumradius(x)).abs() < 1e-10);
        }
        assert!((diameter(&t).value - 2.0 * x).abs() < 1e-10);
    }
    let t = make_regular_triangle(1.0).unwrap();
    let w = width_h(&t, &triangle_side_line(&t).unwrap()).unwrap().value;
    assert!((w - triangle_height(1.0)).abs() < 1e-8);
    assert!(make_regular_triangle(0.0).is_err());
}

#[test]
fn regular_tetrahedron_construction() {
    for x in [0.25, 0.5, 1.0, 1.5] {
        let s = make_regular_tetrahedron(x).unwrap();
        let edges = pairwise(s.vertices());
        assert_eq!(edges.len(), 6);
        for d in edges {
            assert!((d - 2.0 * x).abs() < 1e-10);
        }
        let facet = width_h(&s, &tetrahedron_facet_plane(&s).unwrap()).unwrap().value;
        let edge = width_h(&s, &tetrahedron_edge_plane(&s).unwrap()).unwrap().value;
        assert!((facet - simplex_facet_width(x)).abs() < 1e-6);
        assert!((edge - simplex_edge_width(x)).abs() < 1e-6);
        let o = HPoint::origin(3);
        assert!((s.vertex(0).distance(&o) - tetrahedron_circumradius(x)).abs() < 1e-10);
    }
}

#[test]
fn simplex_width_formulas() {
    assert!((simplex_facet_width(1.0) - 1.4415376863182969).abs() < 1e-14);
    assert!((simplex_edge_width(1.0) - 1.3922373389019811).abs() < 1e-14);
    assert!((simplex_facet_width(8.0) - (8.0 + 3f64.sqrt().ln())).abs() < 5e-3);
    for x in [0.25, 0.5, 1.0, 2.0, 4.0] {
        assert!(simplex_edge_width(x) < simplex_facet_width(x));
    }
    assert!((simplex_edge_width(8.0) / simplex_facet_width(8.0) - 1.0).abs() <= 0.05);
}

#[test]
fn quadratic_from_the_width_comparison() {
    let (a, b) = remark2_roots();
    assert!((a - 7.0 / 29.0).abs() < 1e-12 && (b - 1.0).abs() < 1e-12);
    assert_eq!(remark2_polynomial(1.0), 0.0);
    for l in [1.01, 2.0, 10.0] {
        assert!(remark2_polynomial(l) > 0.0);
    }
    assert!(remark2_polynomial(0.5) < 0.0);
}

#[test]
fn lambert_side_examples() {
    assert_eq!(lambert_side(0.8, 0.0), 0.8);
    let mn = ((2f64).cosh() / 1f64.cosh().powi(2)).acosh();
    assert!((lambert_side(mn, 1.0) - 1.3922373389019811).abs() < 1e-12);
    let v: Vec<f64> = [0.0, 0.5, 1.5].iter().map(|&nz| lambert_side(0.3, nz)).collect();
    assert!(v[0] < v[1] && v[1] < v[2]);
}

#[test]
fn balls_and_orthants() {
    let ball = make_ball(HPoint::origin(2), 1.0).unwrap();
    assert_eq!(ball.centers().len(), 1);
    let poly = ball.discretize(720).unwrap().polytope;
    assert!((thickness(&poly, &SearchOptions::default()).unwrap().value - 2.0).abs() <= 1e-3);
    assert!(make_ball(HPoint::origin(2), -1.0).is_err());

    let q = make_ball_orthant(1.0, 2, 400).unwrap();
    assert!((thickness(&q, &SearchOptions::default()).unwrap().value - 1.0).abs() <= 1e-3);
    let o = HPoint::origin(2);
    for v in q.vertices() {
        let d = v.distance(&o);
        assert!(d < 1e-12 || (d - 1.0).abs() < 1e-12);
        assert!(v.coords()[0] >= -1e-15 && v.coords()[1] >= -1e-15);
    }
}

/// Circumradius of a Reuleaux polygon by bisection on the chord condition.
fn reuleaux_radius_by_bisection(k: usize, delta: f64) -> f64 {
    let angle = PI * (k - 1) as f64 / k as f64;
    let chord = |r: f64| {
        let a = HPoint::from_spatial(&[r.sinh(), 0.0]).unwrap();
        let b = HPoint::from_spatial(&[r.sinh() * angle.cos(), r.sinh() * angle.sin()]).unwrap();
        a.distance(&b)
    };
    let (mut lo, mut hi) = (0.0, delta);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if chord(mid) < delta {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn reuleaux_polygons() {
    for k in [3, 5, 7] {
        for delta in [0.5, 1.0, 2.0] {
            let r = reuleaux_circumradius(k, delta);
            assert!((r - reuleaux_radius_by_bisection(k, delta)).abs() < 1e-12);
            let body = make_reuleaux(k, delta).unwrap();
            let c = body.centers();
            assert_eq!(c.len(), k);
            let h = (k - 1) / 2;
            for i in 0..k {
                assert!((c[i].distance(&c[(i + h) % k]) - delta).abs() < 1e-10);
                assert!((c[i].distance(&c[(i + h + 1) % k]) - delta).abs() < 1e-10);
            }
        }
    }
    let r3 = make_reuleaux(3, 1.0).unwrap();
    for d in pairwise(r3.centers()) {
        assert!((d - 1.0).abs() < 1e-10);
    }
    let poly = r3.discretize(500).unwrap().polytope;
    assert!((diameter(&poly).value - 1.0).abs() <= 1e-3);
    assert!(make_reuleaux(4, 1.0).is_err());
    assert!(make_reuleaux(1, 1.0).is_err());
}

#[test]
fn equidistant_arc_body() {
    let e = make_example1(1.0, PI / 3.0, 200).unwrap();
    assert!(angle_at(&e.a, &e.arc[0], e.arc.last().unwrap()).unwrap() >= PI / 2.0);
    for p in &e.arc {
        assert!((e.h.signed_distance(p) - 1.0).abs() < 1e-12);
    }
    let w = width_h(&e.body, &e.h).unwrap().value;
    assert!((w - 1.0).abs() <= 1e-3);
    let th = thickness(&e.body, &SearchOptions::default()).unwrap().value;
    assert!((th - 1.0).abs() <= 1e-3);
    assert!(e.h.project(&e.arc[e.midpoint]).distance(&e.a) < 1e-9);
    for (i, p) in e.arc.iter().enumerate() {
        if i != e.midpoint {
            assert!(e.h.project(p).distance(&e.a) > 10.0 * hypwidth::EPS_CONTACT);
        }
    }
    assert!(matches!(make_example1(1.0, 0.5, 50), Err(GeometryError::AngleCondition(_))));
}
