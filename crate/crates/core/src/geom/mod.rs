//! Planar primitives and the predicates shared by every structure.
//!
//! Tolerances are fixed and absolute: [`EPS_AREA`] for orientation
//! determinants and [`EPS_DIST`] for point/line distances. They are sized for
//! coordinates of magnitude at most [`COORD_LIMIT`].

mod clip;
mod hull;
mod predicates;

pub use clip::{clip_halfplane, clipped_area};
pub(crate) use clip::clip_convex_ring;
pub use hull::convex_hull;
pub use predicates::{
    angle_at, distance_to_segment, orientation, orientation_det, point_in_polygon,
    segments_intersect, Location, Orientation,
};

use crate::error::{Error, Result};
use std::ops::{Add, Mul, Sub};

pub const EPS_AREA: f64 = 1e-9;
pub const EPS_DIST: f64 = 1e-9;
pub const COORD_LIMIT: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Builds a point, rejecting non-finite coordinates and anything outside
    /// the supported coordinate domain.
    pub fn checked(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() && x.abs() <= COORD_LIMIT && y.abs() <= COORD_LIMIT {
            Ok(Point { x, y })
        } else {
            Err(Error::InvalidCoordinate { x, y })
        }
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    pub fn dist2(self, o: Point) -> f64 {
        let d = self - o;
        d.dot(d)
    }

    pub fn midpoint(self, o: Point) -> Point {
        Point::new(0.5 * (self.x + o.x), 0.5 * (self.y + o.y))
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        self + (o - self) * t
    }

    /// Equality under [`EPS_DIST`] in each coordinate.
    pub fn approx_eq(self, o: Point) -> bool {
        (self.x - o.x).abs() <= EPS_DIST && (self.y - o.y).abs() <= EPS_DIST
    }

    pub fn lex_cmp(&self, o: &Point) -> std::cmp::Ordering {
        self.x.total_cmp(&o.x).then(self.y.total_cmp(&o.y))
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point::new(x, y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        if a.approx_eq(b) {
            return Err(Error::DegenerateSegment);
        }
        Ok(Segment { a, b })
    }

    pub fn length(&self) -> f64 {
        self.a.dist(self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox {
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

impl BBox {
    pub fn new(xmin: f64, ymin: f64, xmax: f64, ymax: f64) -> Result<Self> {
        let finite = [xmin, ymin, xmax, ymax].iter().all(|v| v.is_finite());
        if !finite || xmin >= xmax || ymin >= ymax {
            return Err(Error::InvalidBBox);
        }
        Ok(BBox { xmin, ymin, xmax, ymax })
    }

    /// Tight box of a point set, or `None` when the set is empty.
    pub fn bounding(points: impl IntoIterator<Item = Point>) -> Option<(Point, Point)> {
        let mut it = points.into_iter();
        let first = it.next()?;
        let (mut lo, mut hi) = (first, first);
        for p in it {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        Some((lo, hi))
    }

    pub fn width(&self) -> f64 {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> f64 {
        self.ymax - self.ymin
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn center(&self) -> Point {
        Point::new(0.5 * (self.xmin + self.xmax), 0.5 * (self.ymin + self.ymax))
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.xmin && p.x <= self.xmax && p.y >= self.ymin && p.y <= self.ymax
    }

    pub fn contains_strictly(&self, p: Point) -> bool {
        p.x > self.xmin && p.x < self.xmax && p.y > self.ymin && p.y < self.ymax
    }

    /// Corners in counterclockwise order from the lower left.
    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.xmin, self.ymin),
            Point::new(self.xmax, self.ymin),
            Point::new(self.xmax, self.ymax),
            Point::new(self.xmin, self.ymax),
        ]
    }

    pub fn to_polygon(&self) -> Polygon {
        Polygon::from_ccw_unchecked(self.corners().to_vec())
    }
}

/// Closed halfplane `{p : n·p <= c}` with unit normal `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Halfplane {
    pub nx: f64,
    pub ny: f64,
    pub c: f64,
}

impl Halfplane {
    pub fn new(nx: f64, ny: f64, c: f64) -> Result<Self> {
        if !(nx.is_finite() && ny.is_finite() && c.is_finite())
            || ((nx * nx + ny * ny) - 1.0).abs() > 1e-12
        {
            return Err(Error::NonUnitNormal);
        }
        Ok(Halfplane { nx, ny, c })
    }

    /// Halfplane with outward normal `(cos phi, sin phi)` and offset `c`.
    pub fn from_angle(phi: f64, c: f64) -> Self {
        let (s, co) = phi.sin_cos();
        Halfplane { nx: co, ny: s, c }
    }

    pub fn normal(&self) -> Point {
        Point::new(self.nx, self.ny)
    }

    /// Signed distance of `p` past the boundary line; positive means outside.
    pub fn signed_distance(&self, p: Point) -> f64 {
        self.nx * p.x + self.ny * p.y - self.c
    }

    pub fn contains(&self, p: Point) -> bool {
        self.signed_distance(p) <= 0.0
    }

    /// The closed halfplane on the other side of the same boundary line.
    pub fn complement(&self) -> Halfplane {
        Halfplane { nx: -self.nx, ny: -self.ny, c: -self.c }
    }
}

/// Simple polygon stored counterclockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    /// Validates and normalizes a vertex ring: at least three vertices, no
    /// repeated consecutive vertex, nonzero area and no self-intersection.
    /// Clockwise input is reversed.
    pub fn new(mut vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        for (i, p) in vertices.iter().enumerate() {
            Point::checked(p.x, p.y)?;
            if p.approx_eq(vertices[(i + 1) % n]) {
                return Err(Error::RepeatedVertex(i));
            }
        }
        check_simple(&vertices)?;
        let area = signed_area(&vertices);
        if area.abs() <= EPS_AREA {
            return Err(Error::DegeneratePolygon);
        }
        if area < 0.0 {
            vertices.reverse();
        }
        Ok(Polygon { vertices })
    }

    /// Wraps a ring already known to be simple and counterclockwise.
    pub(crate) fn from_ccw_unchecked(vertices: Vec<Point>) -> Self {
        debug_assert!(vertices.len() >= 3);
        Polygon { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn into_vertices(self) -> Vec<Point> {
        self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Positive shoelace area.
    pub fn area(&self) -> f64 {
        signed_area(&self.vertices).abs()
    }

    pub fn centroid(&self) -> Point {
        let mut a = 0.0;
        let (mut cx, mut cy) = (0.0, 0.0);
        for (p, q) in self.edges() {
            let w = p.cross(q);
            a += w;
            cx += (p.x + q.x) * w;
            cy += (p.y + q.y) * w;
        }
        Point::new(cx / (3.0 * a), cy / (3.0 * a))
    }

    /// No vertex makes a clockwise turn (collinear runs allowed).
    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            orientation(
                self.vertices[i],
                self.vertices[(i + 1) % n],
                self.vertices[(i + 2) % n],
            ) != Orientation::Clockwise
        })
    }

    pub fn bbox(&self) -> BBox {
        let (lo, hi) = BBox::bounding(self.vertices.iter().copied()).expect("nonempty");
        BBox { xmin: lo.x, ymin: lo.y, xmax: hi.x, ymax: hi.y }
    }

    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut d: f64 = 0.0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                d = d.max(v[i].dist(v[j]));
            }
        }
        d
    }

    /// Applies `f` to every vertex and re-validates the result.
    pub fn map(&self, f: impl Fn(Point) -> Point) -> Result<Polygon> {
        Polygon::new(self.vertices.iter().map(|&p| f(p)).collect())
    }
}

/// Shoelace sum; positive for counterclockwise rings.
pub fn signed_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    let mut s = 0.0;
    for i in 0..n {
        s += vertices[i].cross(vertices[(i + 1) % n]);
    }
    0.5 * s
}

fn check_simple(v: &[Point]) -> Result<()> {
    let n = v.len();
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        for j in i + 1..n {
            let (c, d) = (v[j], v[(j + 1) % n]);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // Shared vertex is fine; the two edges must not fold back onto each other.
                let (shared, p, q) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                if orientation(p, shared, q) == Orientation::Collinear
                    && (p - shared).dot(q - shared) > 0.0
                {
                    return Err(Error::SelfIntersecting(i, j));
                }
            } else if segments_intersect(a, b, c, d) {
                return Err(Error::SelfIntersecting(i, j));
            }
        }
    }
    Ok(())
}
