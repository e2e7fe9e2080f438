mod common;

use common::*;
use geoforge::floating_body::{cut_halfplane, dupin_floating_body, dupin_floating_body_with, AreaFraction};
use geoforge::geom::{point_in_polygon, Location};
use geoforge::{Execution, Point, Polygon};

fn d(x: f64) -> AreaFraction {
    AreaFraction::new(x).unwrap()
}

#[test]
fn cap_areas_audit() {
    let mut r = rng(51);
    for _ in 0..50 {
        let poly = random_convex_polygon(&mut r, 12);
        let a = poly.area();
        for delta in [0.05, 0.1, 0.25, 0.45] {
            let fb = dupin_floating_body(&poly, d(delta), 360).unwrap();
            assert_eq!(fb.cuts.len(), 360);
            for h in &fb.cuts {
                let cap = shoelace(&clip_ge(poly.vertices(), h.normal(), h.c));
                assert!((cap - delta * a).abs() <= 1e-8 * a, "cap {cap} target {}", delta * a);
            }
        }
    }
}

#[test]
fn single_cut_audit() {
    let poly = random_convex_polygon(&mut rng(52), 20);
    for k in 0..64 {
        let phi = k as f64 * 0.1;
        let h = cut_halfplane(&poly, phi, d(0.3)).unwrap();
        let cap = shoelace(&clip_ge(poly.vertices(), h.normal(), h.c));
        assert!((cap - 0.3 * poly.area()).abs() <= 1e-8 * poly.area());
    }
}

fn inside_or_on(q: Point, poly: &Polygon, tol: f64) -> bool {
    point_in_polygon(q, poly) != Location::Outside
        || poly.edges().any(|(a, b)| geoforge::geom::distance_to_segment(q, a, b) <= tol)
}

#[test]
fn convex_bodies_nest_and_stay_inside() {
    let mut r = rng(53);
    for _ in 0..20 {
        let poly = random_convex_polygon(&mut r, 10);
        let tol = 1e-9 * poly.diameter();
        let small = dupin_floating_body(&poly, d(0.25), 360).unwrap().convex_fb.unwrap();
        let big = dupin_floating_body(&poly, d(0.1), 360).unwrap().convex_fb.unwrap();
        assert!(small.vertices().iter().all(|&q| inside_or_on(q, &big, tol)));
        assert!(big.vertices().iter().all(|&q| inside_or_on(q, &poly, tol)));
    }
}

#[test]
fn square_oracles() {
    let sq = Polygon::new(vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)]).unwrap();
    let fb = dupin_floating_body(&sq, d(0.1), 720).unwrap();
    let closest = fb.dupin.iter().map(|q| q.dist(p(0.5, 0.1))).fold(f64::INFINITY, f64::min);
    assert!(closest < 1e-6, "{closest}");
    assert!(fb.is_dupin_convex);
    let half = dupin_floating_body(&sq, d(0.5), 720).unwrap();
    assert!(half.dupin.iter().all(|q| q.dist(p(0.5, 0.5)) < 1e-6));
}

#[test]
fn thin_triangle_curve_is_not_convex() {
    let tri = Polygon::new(vec![p(0.0, 0.0), p(10.0, 0.0), p(5.0, 0.5)]).unwrap();
    let fb = dupin_floating_body(&tri, d(0.45), 720).unwrap();
    assert!(!fb.is_dupin_convex);
}

fn hausdorff(a: &[Point], b: &[Point]) -> f64 {
    let one = |x: &[Point], y: &[Point]| {
        x.iter()
            .map(|q| {
                let n = y.len();
                (0..n).map(|i| geoforge::geom::distance_to_segment(*q, y[i], y[(i + 1) % n])).fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    one(a, b).max(one(b, a))
}

#[test]
fn refinement_converges() {
    let poly = random_convex_polygon(&mut rng(54), 15);
    let coarse = dupin_floating_body(&poly, d(0.2), 720).unwrap();
    let fine = dupin_floating_body(&poly, d(0.2), 2880).unwrap();
    assert!(hausdorff(&coarse.dupin, &fine.dupin) < 1e-2 * poly.diameter());
}

#[test]
fn similarity_equivariant() {
    let f = similarity(0.4, 1.7, 3.0, -1.0);
    let poly = random_convex_polygon(&mut rng(55), 9);
    let moved = poly.map(&f).unwrap();
    let a = dupin_floating_body(&poly, d(0.15), 720).unwrap();
    let b = dupin_floating_body(&moved, d(0.15), 720).unwrap();
    let mapped: Vec<Point> = a.dupin.iter().map(|&q| f(q)).collect();
    assert!(hausdorff(&mapped, &b.dupin) < 1e-2 * moved.diameter());
}

#[test]
fn schedules_agree() {
    let poly = random_convex_polygon(&mut rng(56), 9);
    let s = dupin_floating_body_with(&poly, d(0.2), 360, Execution::Sequential).unwrap();
    let q = dupin_floating_body_with(&poly, d(0.2), 360, Execution::Parallel).unwrap();
    assert_eq!(s, q);
}
