//! Ear-clipping triangulation and uniform sampling inside simple polygons.
//!
//! Sampling picks a triangle with probability proportional to its area and
//! then a uniform point in it by folding `(u, v)` back into the unit simplex.
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`. Output index `i` is drawn from stream
//! `i / SAMPLE_CHUNK` of that generator, so sequential and parallel runs
//! produce the same points. Draws per sample: triangle selector, `u`, `v`,
//! each `f64` in `[0, 1)`.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geom::{orientation, orientation_det, Orientation, Point, Polygon};
use crate::io::json;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Samples per independent generator stream.
pub const SAMPLE_CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct Triangulation {
    polygon: Polygon,
    triangles: Vec<[usize; 3]>,
}

impl Triangulation {
    pub fn polygon(&self) -> &Polygon {
        &self.polygon
    }

    /// Index triples into the polygon's (counterclockwise) vertex list.
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn triangle_points(&self, t: usize) -> [Point; 3] {
        let v = self.polygon.vertices();
        self.triangles[t].map(|i| v[i])
    }

    pub fn triangle_area(&self, t: usize) -> f64 {
        let [a, b, c] = self.triangle_points(t);
        0.5 * orientation_det(a, b, c)
    }

    pub fn to_json(&self, samples: &[Point]) -> String {
        format!(
            "{{\"triangles\":{},\"samples\":{}}}",
            json::list(self.triangles.iter().map(|[i, j, k]| format!("[{i},{j},{k}]"))),
            json::points(samples)
        )
    }
}

/// Ear clipping. Each step clips the first ear found scanning the remaining
/// vertices from the lowest index: a convex corner whose triangle contains no
/// other remaining vertex. When no proper ear is left but a straight
/// (collinear) corner is, that corner is clipped as a zero-area triangle.
pub fn triangulate(poly: &Polygon) -> Result<Triangulation> {
    let v = poly.vertices();
    let mut remaining: Vec<usize> = (0..v.len()).collect();
    let mut triangles = Vec::with_capacity(v.len().saturating_sub(2));

    while remaining.len() > 3 {
        let m = remaining.len();
        let corner = |k: usize| (remaining[(k + m - 1) % m], remaining[k], remaining[(k + 1) % m]);
        let is_ear = |k: usize| {
            let (a, b, c) = corner(k);
            if orientation(v[a], v[b], v[c]) != Orientation::CounterClockwise {
                return false;
            }
            remaining
                .iter()
                .filter(|&&r| r != a && r != b && r != c)
                .all(|&r| !in_closed_triangle(v[r], v[a], v[b], v[c]))
        };
        let pick = (0..m).find(|&k| is_ear(k)).or_else(|| {
            (0..m).find(|&k| {
                let (a, b, c) = corner(k);
                orientation(v[a], v[b], v[c]) == Orientation::Collinear
            })
        });
        let Some(k) = pick else {
            return Err(Error::EarClippingStalled(m));
        };
        let (a, b, c) = corner(k);
        triangles.push([a, b, c]);
        remaining.remove(k);
    }
    if let [a, b, c] = remaining[..] {
        triangles.push([a, b, c]);
    }
    Ok(Triangulation { polygon: poly.clone(), triangles })
}

fn in_closed_triangle(p: Point, a: Point, b: Point, c: Point) -> bool {
    orientation(a, b, p) != Orientation::Clockwise
        && orientation(b, c, p) != Orientation::Clockwise
        && orientation(c, a, p) != Orientation::Clockwise
}

/// `a + u(b - a) + v(c - a)` after folding `(u, v)` into the unit simplex.
pub fn barycentric_point(a: Point, b: Point, c: Point, mut u: f64, mut v: f64) -> Point {
    if u + v > 1.0 {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    a + (b - a) * u + (c - a) * v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleRequest {
    pub count: usize,
    pub seed: u64,
}

impl SampleRequest {
    pub fn new(count: usize, seed: u64) -> Result<Self> {
        if count == 0 {
            return Err(Error::ZeroSampleCount);
        }
        Ok(SampleRequest { count, seed })
    }
}

pub fn sample_points(tri: &Triangulation, req: SampleRequest) -> Result<Vec<Point>> {
    sample_points_with(tri, req, Execution::default())
}

pub fn sample_points_with(tri: &Triangulation, req: SampleRequest, exec: Execution) -> Result<Vec<Point>> {
    if req.count == 0 {
        return Err(Error::ZeroSampleCount);
    }
    let mut cumulative = Vec::with_capacity(tri.triangles.len());
    let mut total = 0.0;
    for t in 0..tri.triangles.len() {
        total += tri.triangle_area(t).max(0.0);
        cumulative.push(total);
    }
    let chunks = req.count.div_ceil(SAMPLE_CHUNK);
    let parts = exec.map_range(0..chunks, |chunk| {
        let mut rng = ChaCha8Rng::seed_from_u64(req.seed);
        rng.set_stream(chunk as u64);
        let len = SAMPLE_CHUNK.min(req.count - chunk * SAMPLE_CHUNK);
        (0..len)
            .map(|_| {
                let r: f64 = rng.random::<f64>() * total;
                // first triangle whose cumulative area exceeds r; zero-area ones are never picked
                let t = cumulative.partition_point(|&c| c <= r).min(cumulative.len() - 1);
                let [a, b, c] = tri.triangle_points(t);
                let u: f64 = rng.random();
                let v: f64 = rng.random();
                barycentric_point(a, b, c, u, v)
            })
            .collect::<Vec<_>>()
    });
    Ok(parts.into_iter().flatten().collect())
}
