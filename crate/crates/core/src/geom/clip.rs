use super::{Halfplane, Point, Polygon};
use crate::error::{Error, Result};

/// Intersects a convex polygon with a closed halfplane.
///
/// Returns `Ok(None)` when the intersection has zero area.
pub fn clip_halfplane(poly: &Polygon, h: &Halfplane) -> Result<Option<Polygon>> {
    if !poly.is_convex() {
        return Err(Error::NonConvex);
    }
    Ok(clip_convex_ring(poly.vertices(), h).map(Polygon::from_ccw_unchecked))
}

/// Sutherland-Hodgman against one halfplane; assumes a convex CCW ring.
pub(crate) fn clip_convex_ring(ring: &[Point], h: &Halfplane) -> Option<Vec<Point>> {
    let n = ring.len();
    let mut out: Vec<Point> = Vec::with_capacity(n + 2);
    let push = |p: Point, out: &mut Vec<Point>| {
        if out.last() != Some(&p) {
            out.push(p);
        }
    };
    for i in 0..n {
        let p = ring[i];
        let q = ring[(i + 1) % n];
        let sp = h.signed_distance(p);
        let sq = h.signed_distance(q);
        if sp <= 0.0 {
            push(p, &mut out);
        }
        if (sp < 0.0 && sq > 0.0) || (sp > 0.0 && sq < 0.0) {
            push(p.lerp(q, sp / (sp - sq)), &mut out);
        }
    }
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    if out.len() < 3 || super::signed_area(&out) <= 0.0 {
        return None;
    }
    Some(out)
}

/// Area of `ring ∩ h` for a convex CCW ring, without allocating.
pub fn clipped_area(ring: &[Point], h: &Halfplane) -> f64 {
    let n = ring.len();
    let mut first: Option<Point> = None;
    let mut prev: Option<Point> = None;
    let mut twice = 0.0;
    let mut emit = |p: Point| {
        if let Some(q) = prev {
            twice += q.cross(p);
        } else {
            first = Some(p);
        }
        prev = Some(p);
    };
    for i in 0..n {
        let p = ring[i];
        let q = ring[(i + 1) % n];
        let sp = h.signed_distance(p);
        let sq = h.signed_distance(q);
        if sp <= 0.0 {
            emit(p);
        }
        if (sp < 0.0 && sq > 0.0) || (sp > 0.0 && sq < 0.0) {
            emit(p.lerp(q, sp / (sp - sq)));
        }
    }
    if let (Some(f), Some(l)) = (first, prev) {
        twice += l.cross(f);
    }
    (0.5 * twice).max(0.0)
}
