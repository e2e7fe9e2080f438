//! Dupin and convex floating bodies of a convex polygon.
//!
//! For each sampled direction `phi` the cutting line with outward normal
//! `(cos phi, sin phi)` is placed so the cap beyond it has area `delta * A`.
//! The Dupin body is the closed polyline through the midpoints of those
//! chords; the convex floating body is the polygon clipped by every
//! retained halfplane.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geom::{clip_convex_ring, clipped_area, orientation_det, Halfplane, Point, Polygon, EPS_AREA, EPS_DIST};
use crate::io::json;
use std::f64::consts::TAU;

pub const DEFAULT_DIRECTIONS: usize = 720;

const AREA_TOL: f64 = 1e-9;
const OFFSET_TOL: f64 = 1e-12;

/// Fraction of the polygon area cut away by each cap, in `(0, 0.5]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaFraction(f64);

impl AreaFraction {
    pub fn new(delta: f64) -> Result<Self> {
        if delta > 0.0 && delta <= 0.5 {
            Ok(AreaFraction(delta))
        } else {
            Err(Error::InvalidDelta(delta))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FloatingBodyResult {
    pub delta: f64,
    /// Chord midpoints in direction order; read as a closed polyline.
    pub dupin: Vec<Point>,
    /// Cutting halfplanes, one per direction, in the same order.
    pub cuts: Vec<Halfplane>,
    /// `None` when every retained halfplane together leave zero area.
    pub convex_fb: Option<Polygon>,
    pub is_dupin_convex: bool,
    pub directions: usize,
}

impl FloatingBodyResult {
    pub fn to_json(&self) -> String {
        let fb = self.convex_fb.as_ref().map_or_else(|| "null".to_string(), |p| json::points(p.vertices()));
        format!(
            "{{\"delta\":{},\"dupin\":{},\"convex_fb\":{},\"is_dupin_convex\":{}}}",
            json::num(self.delta),
            json::points(&self.dupin),
            fb,
            self.is_dupin_convex
        )
    }
}

/// Halfplane with outward normal `(cos phi, sin phi)` whose complement cuts
/// a cap of area `delta * area(poly)` off the polygon.
pub fn cut_halfplane(poly: &Polygon, phi: f64, delta: AreaFraction) -> Result<Halfplane> {
    if !poly.is_convex() {
        return Err(Error::NonConvex);
    }
    Ok(cut(poly.vertices(), phi, delta.0 * poly.area(), poly.area(), poly.diameter()))
}

fn cut(ring: &[Point], phi: f64, target: f64, area: f64, diameter: f64) -> Halfplane {
    let (s, c) = phi.sin_cos();
    let n = Point::new(c, s);
    let (mut lo, mut hi) = ring
        .iter()
        .map(|p| n.dot(*p))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    // cap area {n·p >= offset} falls from `area` at lo to 0 at hi
    let cap = |offset: f64| clipped_area(ring, &Halfplane { nx: -n.x, ny: -n.y, c: -offset });
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..200 {
        mid = 0.5 * (lo + hi);
        let a = cap(mid);
        if (a - target).abs() <= AREA_TOL * area || hi - lo < OFFSET_TOL * diameter {
            break;
        }
        if a > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Halfplane { nx: n.x, ny: n.y, c: mid }
}

/// Midpoint of the chord cut from the polygon by the boundary line of `h`.
pub fn chord_midpoint(poly: &Polygon, h: &Halfplane) -> Result<Point> {
    chord(poly.vertices(), h).map(|(a, b)| a.midpoint(b))
}

fn chord(ring: &[Point], h: &Halfplane) -> Result<(Point, Point)> {
    let side: Vec<f64> = ring.iter().map(|p| h.signed_distance(*p)).collect();
    let below = side.iter().any(|&s| s < -EPS_DIST);
    let above = side.iter().any(|&s| s > EPS_DIST);
    if !(below && above) {
        return Err(Error::LineMissesPolygon);
    }
    let dir = Point::new(-h.ny, h.nx);
    let mut lo: Option<(f64, Point)> = None;
    let mut hi: Option<(f64, Point)> = None;
    let mut take = |p: Point| {
        let t = dir.dot(p);
        if lo.is_none_or(|(v, _)| t < v) {
            lo = Some((t, p));
        }
        if hi.is_none_or(|(v, _)| t > v) {
            hi = Some((t, p));
        }
    };
    let n = ring.len();
    for i in 0..n {
        let (sp, sq) = (side[i], side[(i + 1) % n]);
        if sp == 0.0 {
            take(ring[i]);
        }
        if (sp < 0.0 && sq > 0.0) || (sp > 0.0 && sq < 0.0) {
            take(ring[i].lerp(ring[(i + 1) % n], sp / (sp - sq)));
        }
    }
    match (lo, hi) {
        (Some((_, a)), Some((_, b))) => Ok((a, b)),
        _ => Err(Error::LineMissesPolygon),
    }
}

pub fn dupin_floating_body(poly: &Polygon, delta: AreaFraction, n_directions: usize) -> Result<FloatingBodyResult> {
    dupin_floating_body_with(poly, delta, n_directions, Execution::default())
}

pub fn dupin_floating_body_with(
    poly: &Polygon,
    delta: AreaFraction,
    n_directions: usize,
    exec: Execution,
) -> Result<FloatingBodyResult> {
    if !poly.is_convex() {
        return Err(Error::NonConvex);
    }
    if n_directions < 3 {
        return Err(Error::TooFewDirections(n_directions));
    }
    let ring = poly.vertices();
    let area = poly.area();
    let diameter = poly.diameter();
    let target = delta.0 * area;

    let per_direction = exec.map_range(0..n_directions, |k| {
        let phi = TAU * k as f64 / n_directions as f64;
        let h = cut(ring, phi, target, area, diameter);
        chord(ring, &h).map(|(a, b)| (h, a.midpoint(b)))
    });
    let mut cuts = Vec::with_capacity(n_directions);
    let mut dupin = Vec::with_capacity(n_directions);
    for r in per_direction {
        let (h, m) = r?;
        cuts.push(h);
        dupin.push(m);
    }

    let mut body = Some(ring.to_vec());
    for h in &cuts {
        body = body.and_then(|b| clip_convex_ring(&b, h));
    }
    let convex_fb = body.and_then(|mut b| {
        let tol = 1e-12 * diameter;
        b.dedup_by(|a, c| a.dist(*c) <= tol);
        while b.len() > 1 && b[0].dist(b[b.len() - 1]) <= tol {
            b.pop();
        }
        (b.len() >= 3).then(|| Polygon::from_ccw_unchecked(b))
    });

    // midpoints are only located to ~1e-9 relative, so merge anything closer than 1e-6
    let is_dupin_convex = is_convex_closed_curve(&dupin, 1e-6 * diameter);
    Ok(FloatingBodyResult { delta: delta.0, dupin, cuts, convex_fb, is_dupin_convex, directions: n_directions })
}

/// Turn test on a closed polyline: no clockwise turn beyond [`EPS_AREA`]
/// and total turning of one full counterclockwise revolution. Curves that
/// collapse to fewer than three distinct points count as convex.
pub fn is_convex_closed_curve(points: &[Point], merge_tol: f64) -> bool {
    let mut pts: Vec<Point> = Vec::with_capacity(points.len());
    for &p in points {
        if pts.last().is_none_or(|q: &Point| q.dist(p) > merge_tol) {
            pts.push(p);
        }
    }
    while pts.len() > 1 && pts[0].dist(pts[pts.len() - 1]) <= merge_tol {
        pts.pop();
    }
    let n = pts.len();
    if n < 3 {
        return true;
    }
    let mut turning = 0.0;
    for i in 0..n {
        let (a, b, c) = (pts[i], pts[(i + 1) % n], pts[(i + 2) % n]);
        if orientation_det(a, b, c) < -EPS_AREA {
            return false;
        }
        let (u, v) = (b - a, c - b);
        turning += u.cross(v).atan2(u.dot(v));
    }
    (turning - TAU).abs() < 1e-6
}
