//! Random instance generators and brute-force oracles shared by the
//! integration tests. Everything here is deliberately naive.
#![allow(dead_code)]

use geoforge::{Point, Polygon, Segment};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

pub fn random_points(rng: &mut impl Rng, n: usize) -> Vec<Point> {
    (0..n).map(|_| p(rng.random(), rng.random())).collect()
}

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Closed segment intersection with exact sign tests plus on-segment checks.
pub fn seg_touch(a: Point, b: Point, c: Point, d: Point) -> bool {
    let on = |p: Point, q: Point, r: Point| {
        cross(p, q, r) == 0.0
            && r.x >= p.x.min(q.x)
            && r.x <= p.x.max(q.x)
            && r.y >= p.y.min(q.y)
            && r.y <= p.y.max(q.y)
    };
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    on(c, d, a) || on(c, d, b) || on(a, b, c) || on(a, b, d)
}

fn seg_dist(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let t = ((p - a).dot(ab) / ab.dot(ab)).clamp(0.0, 1.0);
    p.dist(a + ab * t)
}

/// Pairwise disjoint, non-vertical segments in the unit square whose
/// endpoints all have distinct x coordinates.
pub fn random_segments(rng: &mut impl Rng, n: usize) -> Vec<Segment> {
    let mut out: Vec<Segment> = Vec::new();
    let mut xs: Vec<f64> = Vec::new();
    while out.len() < n {
        let a = p(rng.random(), rng.random());
        let len = rng.random_range(0.05..0.3);
        let ang: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let b = p(a.x + len * ang.cos(), a.y + len * ang.sin());
        if !(0.0..=1.0).contains(&b.x) || !(0.0..=1.0).contains(&b.y) || (b.x - a.x).abs() < 1e-3 {
            continue;
        }
        if xs.iter().any(|&x| (x - a.x).abs() < 1e-6 || (x - b.x).abs() < 1e-6) {
            continue;
        }
        let clear = out.iter().all(|s| {
            !seg_touch(a, b, s.a, s.b)
                && seg_dist(a, s.a, s.b) > 1e-4
                && seg_dist(b, s.a, s.b) > 1e-4
                && seg_dist(s.a, a, b) > 1e-4
                && seg_dist(s.b, a, b) > 1e-4
        });
        if clear {
            xs.push(a.x);
            xs.push(b.x);
            out.push(Segment::new(a, b).unwrap());
        }
    }
    out
}

/// Random simple polygon: random permutation of random points, untangled by
/// 2-opt moves until no two edges cross.
pub fn random_simple_polygon(rng: &mut impl Rng, n: usize) -> Polygon {
    loop {
        let mut pts = random_points(rng, n);
        let mut changed = true;
        let mut rounds = 0;
        while changed && rounds < 10_000 {
            changed = false;
            rounds += 1;
            'scan: for i in 0..n {
                for j in i + 2..n {
                    if i == 0 && j == n - 1 {
                        continue;
                    }
                    let (a, b) = (pts[i], pts[i + 1]);
                    let (c, d) = (pts[j], pts[(j + 1) % n]);
                    if seg_touch(a, b, c, d) {
                        pts[i + 1..=j].reverse();
                        changed = true;
                        break 'scan;
                    }
                }
            }
        }
        if let Ok(poly) = Polygon::new(pts) {
            return poly;
        }
    }
}

/// Convex polygon from points on a randomly stretched and rotated ellipse.
pub fn random_convex_polygon(rng: &mut impl Rng, n: usize) -> Polygon {
    let mut angles: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..std::f64::consts::TAU)).collect();
    angles.sort_by(f64::total_cmp);
    let (rx, ry) = (rng.random_range(0.5..2.0), rng.random_range(0.2..1.0));
    let rot: f64 = rng.random_range(0.0..std::f64::consts::PI);
    let (cx, cy) = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    let mut pts: Vec<Point> = angles
        .iter()
        .map(|t| {
            let (x, y) = (rx * t.cos(), ry * t.sin());
            p(cx + x * rot.cos() - y * rot.sin(), cy + x * rot.sin() + y * rot.cos())
        })
        .collect();
    pts.dedup_by(|a, b| a.dist(*b) < 1e-6);
    match Polygon::new(pts) {
        Ok(poly) if poly.is_convex() && poly.len() >= 3 => poly,
        _ => random_convex_polygon(rng, n),
    }
}

pub fn shoelace(ring: &[Point]) -> f64 {
    let n = ring.len();
    (0..n).map(|i| ring[i].x * ring[(i + 1) % n].y - ring[(i + 1) % n].x * ring[i].y).sum::<f64>() / 2.0
}

/// Part of `ring` on the side `n·p >= c`.
pub fn clip_ge(ring: &[Point], n: Point, c: f64) -> Vec<Point> {
    let mut out = Vec::new();
    let k = ring.len();
    for i in 0..k {
        let (a, b) = (ring[i], ring[(i + 1) % k]);
        let (fa, fb) = (n.dot(a) - c, n.dot(b) - c);
        if fa >= 0.0 {
            out.push(a);
        }
        if (fa >= 0.0) != (fb >= 0.0) {
            out.push(a + (b - a) * (fa / (fa - fb)));
        }
    }
    out
}

/// Gift-wrapping hull; returns indices of every input point lying on the
/// hull boundary (vertices and points on hull edges).
pub fn jarvis_boundary(pts: &[Point]) -> Vec<usize> {
    let n = pts.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let start = (0..n).min_by(|&a, &b| pts[a].lex_cmp(&pts[b])).unwrap();
    let mut hull = vec![start];
    let mut cur = start;
    loop {
        let mut next = if cur == 0 { 1 } else { 0 };
        for k in 0..n {
            if k == cur {
                continue;
            }
            let o = cross(pts[cur], pts[next], pts[k]);
            if o < 0.0 || (o == 0.0 && pts[cur].dist2(pts[k]) > pts[cur].dist2(pts[next])) {
                next = k;
            }
        }
        if next == start {
            break;
        }
        hull.push(next);
        cur = next;
        if hull.len() > n {
            panic!("gift wrapping did not close");
        }
    }
    let m = hull.len();
    (0..n)
        .filter(|&k| {
            (0..m).any(|e| {
                let (a, b) = (pts[hull[e]], pts[hull[(e + 1) % m]]);
                k == hull[e] || (cross(a, b, pts[k]).abs() <= 1e-12 && seg_dist(pts[k], a, b) <= 1e-12)
            })
        })
        .collect()
}

pub fn sorted(mut v: Vec<Point>) -> Vec<Point> {
    v.sort_by(|a, b| a.lex_cmp(b));
    v
}

/// Rigid motion plus uniform scale.
pub fn similarity(angle: f64, scale: f64, tx: f64, ty: f64) -> impl Fn(Point) -> Point {
    let (s, c) = angle.sin_cos();
    move |q: Point| p(scale * (c * q.x - s * q.y) + tx, scale * (s * q.x + c * q.y) + ty)
}
