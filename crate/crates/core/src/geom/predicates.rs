use super::{Point, Polygon, EPS_AREA, EPS_DIST};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// `(q - p) × (r - p)`.
#[inline]
pub fn orientation_det(p: Point, q: Point, r: Point) -> f64 {
    (q - p).cross(r - p)
}

#[inline]
pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    let d = orientation_det(p, q, r);
    if d > EPS_AREA {
        Orientation::CounterClockwise
    } else if d < -EPS_AREA {
        Orientation::Clockwise
    } else {
        Orientation::Collinear
    }
}

/// Angle at apex `v3` between the rays towards `v1` and `v2`, in `[0, pi]`.
pub fn angle_at(v1: Point, v3: Point, v2: Point) -> Result<f64> {
    let a = v1 - v3;
    let b = v2 - v3;
    if a.norm() <= EPS_DIST || b.norm() <= EPS_DIST {
        return Err(Error::DegenerateAngle);
    }
    // atan2 of |cross| and dot stays accurate near 0 and pi, unlike acos.
    Ok(a.cross(b).abs().atan2(a.dot(b)))
}

pub fn distance_to_segment(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.dist(a + ab * t)
}

fn on_segment(p: Point, a: Point, b: Point) -> bool {
    distance_to_segment(p, a, b) <= EPS_DIST
}

/// Closed segment intersection test; touching endpoints count.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = orientation_det(a, b, c);
    let d2 = orientation_det(a, b, d);
    let d3 = orientation_det(c, d, a);
    let d4 = orientation_det(c, d, b);
    if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
        return true;
    }
    on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d)
}

pub fn point_in_polygon(p: Point, poly: &Polygon) -> Location {
    let mut inside = false;
    for (a, b) in poly.edges() {
        if on_segment(p, a, b) {
            return Location::Boundary;
        }
        if (a.y > p.y) != (b.y > p.y) {
            let x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if x > p.x {
                inside = !inside;
            }
        }
    }
    if inside {
        Location::Inside
    } else {
        Location::Outside
    }
}
