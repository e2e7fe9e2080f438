//! Trapezoidal maps of interior-disjoint segments inside a bounding box.
//!
//! Vertical extensions are found by brute-force ray shooting from every
//! endpoint (O(n^2)). Trapezoids are enumerated by sweeping the slabs between
//! consecutive endpoint x-coordinates: a trapezoid is a maximal run of slabs
//! in which the same pair of boundaries is vertically adjacent.

use crate::error::{Error, Result};
use crate::geom::{distance_to_segment, orientation, segments_intersect, BBox, Orientation, Point, Segment, EPS_DIST};
use crate::io::json;
use std::collections::BTreeMap;

/// What a ray or trapezoid side runs into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Boundary {
    Bottom,
    Segment(usize),
    Top,
}

impl Boundary {
    fn to_json(self) -> String {
        match self {
            Boundary::Bottom => "\"bottom\"".into(),
            Boundary::Top => "\"top\"".into(),
            Boundary::Segment(i) => i.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hit {
    pub point: Point,
    pub target: Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerticalExtension {
    pub origin: Point,
    pub up: Hit,
    pub down: Hit,
}

/// A trapezoid bounded above and below by segments (or the box walls) and
/// on the sides by the vertical lines `x = left_x` and `x = right_x`.
/// `leftp`/`rightp` are the endpoints defining those sides, `None` for the
/// box walls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trapezoid {
    pub top: Boundary,
    pub bottom: Boundary,
    pub left_x: f64,
    pub right_x: f64,
    pub leftp: Option<Point>,
    pub rightp: Option<Point>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrapezoidalMap {
    bbox: BBox,
    segments: Vec<Segment>,
    extensions: Vec<VerticalExtension>,
    trapezoids: Vec<Trapezoid>,
}

impl TrapezoidalMap {
    /// Builds the map. Segments are stored left-to-right. Without a box, the
    /// tight box of all endpoints is grown by 10% on every side.
    pub fn build(segments: &[Segment], bbox: Option<BBox>) -> Result<Self> {
        let mut segs = Vec::with_capacity(segments.len());
        for (i, s) in segments.iter().enumerate() {
            for p in [s.a, s.b] {
                Point::checked(p.x, p.y)?;
            }
            if (s.a.x - s.b.x).abs() <= EPS_DIST {
                return Err(Error::VerticalSegment(i));
            }
            segs.push(if s.a.x < s.b.x { *s } else { Segment { a: s.b, b: s.a } });
        }
        let bbox = match bbox {
            Some(b) => {
                if let Some(i) = segs.iter().position(|s| !b.contains_strictly(s.a) || !b.contains_strictly(s.b)) {
                    return Err(Error::SegmentOutsideBBox(i));
                }
                b
            }
            None => default_bbox(&segs),
        };
        check_disjoint(&mut segs)?;

        let mut endpoints: Vec<Point> = Vec::new();
        for s in &segs {
            for p in [s.a, s.b] {
                if !endpoints.contains(&p) {
                    endpoints.push(p);
                }
            }
        }
        endpoints.sort_by(Point::lex_cmp);

        let mut map = TrapezoidalMap { bbox, segments: segs, extensions: Vec::new(), trapezoids: Vec::new() };
        map.extensions = endpoints.iter().map(|&p| map.shoot(p)).collect();
        map.trapezoids = map.sweep(&endpoints);
        Ok(map)
    }

    pub fn bbox(&self) -> BBox {
        self.bbox
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn extensions(&self) -> &[VerticalExtension] {
        &self.extensions
    }

    pub fn trapezoids(&self) -> &[Trapezoid] {
        &self.trapezoids
    }

    /// Height of a boundary at `x`.
    pub fn boundary_y(&self, b: Boundary, x: f64) -> f64 {
        match b {
            Boundary::Bottom => self.bbox.ymin,
            Boundary::Top => self.bbox.ymax,
            Boundary::Segment(i) => y_at(&self.segments[i], x),
        }
    }

    pub fn trapezoid_area(&self, t: &Trapezoid) -> f64 {
        let h = |x| self.boundary_y(t.top, x) - self.boundary_y(t.bottom, x);
        0.5 * (t.right_x - t.left_x) * (h(t.left_x) + h(t.right_x))
    }

    /// Corners counterclockwise from the lower left (may repeat a point
    /// where top and bottom meet).
    pub fn trapezoid_corners(&self, t: &Trapezoid) -> [Point; 4] {
        [
            Point::new(t.left_x, self.boundary_y(t.bottom, t.left_x)),
            Point::new(t.right_x, self.boundary_y(t.bottom, t.right_x)),
            Point::new(t.right_x, self.boundary_y(t.top, t.right_x)),
            Point::new(t.left_x, self.boundary_y(t.top, t.left_x)),
        ]
    }

    /// Strict interior containment of `q` in trapezoid `t`.
    pub fn trapezoid_contains(&self, t: &Trapezoid, q: Point) -> bool {
        t.left_x < q.x
            && q.x < t.right_x
            && self.boundary_y(t.bottom, q.x) < q.y
            && q.y < self.boundary_y(t.top, q.x)
    }

    /// Linear-scan point location.
    pub fn locate(&self, q: Point) -> Result<usize> {
        if !self.bbox.contains_strictly(q) {
            return Err(Error::QueryOutsideBBox);
        }
        let on_segment = self.segments.iter().any(|s| distance_to_segment(q, s.a, s.b) <= EPS_DIST);
        let on_extension = self.extensions.iter().any(|e| {
            (q.x - e.origin.x).abs() <= EPS_DIST && q.y >= e.down.point.y - EPS_DIST && q.y <= e.up.point.y + EPS_DIST
        });
        if on_segment || on_extension {
            return Err(Error::DegenerateQuery);
        }
        self.trapezoids
            .iter()
            .position(|t| self.trapezoid_contains(t, q))
            .ok_or(Error::DegenerateQuery)
    }

    fn shoot(&self, p: Point) -> VerticalExtension {
        let mut up = Hit { point: Point::new(p.x, self.bbox.ymax), target: Boundary::Top };
        let mut down = Hit { point: Point::new(p.x, self.bbox.ymin), target: Boundary::Bottom };
        for (i, s) in self.segments.iter().enumerate() {
            // rays never re-enter a segment incident to their origin
            if s.a == p || s.b == p {
                continue;
            }
            if p.x < s.a.x - EPS_DIST || p.x > s.b.x + EPS_DIST {
                continue;
            }
            let y = y_at(s, p.x);
            if y > p.y + EPS_DIST && y < up.point.y {
                up = Hit { point: Point::new(p.x, y), target: Boundary::Segment(i) };
            } else if y < p.y - EPS_DIST && y > down.point.y {
                down = Hit { point: Point::new(p.x, y), target: Boundary::Segment(i) };
            }
        }
        VerticalExtension { origin: p, up, down }
    }

    fn sweep(&self, endpoints: &[Point]) -> Vec<Trapezoid> {
        let mut xs: Vec<f64> = endpoints.iter().map(|p| p.x).collect();
        xs.push(self.bbox.xmin);
        xs.push(self.bbox.xmax);
        xs.sort_by(f64::total_cmp);
        xs.dedup_by(|a, b| (*a - *b).abs() <= EPS_DIST);

        let mut open: BTreeMap<(Boundary, Boundary), f64> = BTreeMap::new();
        let mut done = Vec::new();
        for k in 0..xs.len() - 1 {
            let (x0, x1) = (xs[k], xs[k + 1]);
            let mid = 0.5 * (x0 + x1);
            let mut spanning: Vec<usize> = (0..self.segments.len())
                .filter(|&i| {
                    let s = &self.segments[i];
                    s.a.x <= x0 + EPS_DIST && s.b.x >= x1 - EPS_DIST
                })
                .collect();
            spanning.sort_by(|&i, &j| y_at(&self.segments[i], mid).total_cmp(&y_at(&self.segments[j], mid)));
            let mut stack = vec![Boundary::Bottom];
            stack.extend(spanning.into_iter().map(Boundary::Segment));
            stack.push(Boundary::Top);
            let pairs: Vec<(Boundary, Boundary)> = stack.windows(2).map(|w| (w[0], w[1])).collect();

            let closing: Vec<(Boundary, Boundary)> = open.keys().filter(|k| !pairs.contains(k)).copied().collect();
            for key in closing {
                let left_x = open.remove(&key).expect("open trapezoid");
                done.push(self.finish(key, left_x, x0, endpoints));
            }
            for key in pairs {
                open.entry(key).or_insert(x0);
            }
        }
        let xmax = *xs.last().expect("box walls present");
        for (key, left_x) in std::mem::take(&mut open) {
            done.push(self.finish(key, left_x, xmax, endpoints));
        }
        done.sort_by(|a, b| {
            a.left_x.total_cmp(&b.left_x).then_with(|| {
                let ya = self.boundary_y(a.bottom, 0.5 * (a.left_x + a.right_x));
                let yb = self.boundary_y(b.bottom, 0.5 * (b.left_x + b.right_x));
                ya.total_cmp(&yb)
            })
        });
        done
    }

    fn finish(&self, (bottom, top): (Boundary, Boundary), left_x: f64, right_x: f64, endpoints: &[Point]) -> Trapezoid {
        let defining = |x: f64, wall: f64| -> Option<Point> {
            if (x - wall).abs() <= EPS_DIST {
                return None;
            }
            let lo = self.boundary_y(bottom, x) - EPS_DIST;
            let hi = self.boundary_y(top, x) + EPS_DIST;
            endpoints
                .iter()
                .find(|p| (p.x - x).abs() <= EPS_DIST && p.y >= lo && p.y <= hi)
                .copied()
        };
        Trapezoid {
            top,
            bottom,
            left_x,
            right_x,
            leftp: defining(left_x, self.bbox.xmin),
            rightp: defining(right_x, self.bbox.xmax),
        }
    }

    /// Dump with keys `bbox`, `segments`, `extensions`, `trapezoids`.
    pub fn to_json(&self) -> String {
        let b = self.bbox;
        let bbox = json::list([b.xmin, b.ymin, b.xmax, b.ymax].map(json::num));
        let segments = json::list(self.segments.iter().map(|s| json::points(&[s.a, s.b])));
        let extensions = json::list(self.extensions.iter().map(|e| {
            format!(
                "{{\"origin\":{},\"up\":{},\"up_target\":{},\"down\":{},\"down_target\":{}}}",
                json::point(e.origin),
                json::point(e.up.point),
                e.up.target.to_json(),
                json::point(e.down.point),
                e.down.target.to_json()
            )
        }));
        let opt = |p: Option<Point>| p.map_or_else(|| "null".to_string(), json::point);
        let trapezoids = json::list(self.trapezoids.iter().map(|t| {
            format!(
                "{{\"top\":{},\"bottom\":{},\"left_x\":{},\"right_x\":{},\"leftp\":{},\"rightp\":{}}}",
                t.top.to_json(),
                t.bottom.to_json(),
                json::num(t.left_x),
                json::num(t.right_x),
                opt(t.leftp),
                opt(t.rightp)
            )
        }));
        format!("{{\"bbox\":{bbox},\"segments\":{segments},\"extensions\":{extensions},\"trapezoids\":{trapezoids}}}")
    }
}

fn y_at(s: &Segment, x: f64) -> f64 {
    let x = x.clamp(s.a.x, s.b.x);
    if x == s.a.x {
        return s.a.y;
    }
    if x == s.b.x {
        return s.b.y;
    }
    s.a.y + (x - s.a.x) * (s.b.y - s.a.y) / (s.b.x - s.a.x)
}

fn default_bbox(segs: &[Segment]) -> BBox {
    let Some((lo, hi)) = BBox::bounding(segs.iter().flat_map(|s| [s.a, s.b])) else {
        return BBox { xmin: 0.0, ymin: 0.0, xmax: 1.0, ymax: 1.0 };
    };
    let w = hi.x - lo.x;
    let h = hi.y - lo.y;
    let px = 0.1 * w;
    let py = if h > EPS_DIST { 0.1 * h } else { 0.1 * w };
    BBox { xmin: lo.x - px, ymin: lo.y - py, xmax: hi.x + px, ymax: hi.y + py }
}

/// Rejects every pair of segments meeting anywhere other than a shared
/// endpoint, and snaps nearly-shared endpoints onto one coordinate.
fn check_disjoint(segs: &mut [Segment]) -> Result<()> {
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let (s, t) = (segs[i], segs[j]);
            let shared = [(s.a, t.a), (s.a, t.b), (s.b, t.a), (s.b, t.b)]
                .iter()
                .filter(|(p, q)| p.approx_eq(*q))
                .count();
            match shared {
                0 => {
                    if segments_intersect(s.a, s.b, t.a, t.b) {
                        return Err(Error::SegmentsIntersect(i, j));
                    }
                }
                1 => {
                    let (common, u, v) = if s.a.approx_eq(t.a) {
                        (s.a, s.b, t.b)
                    } else if s.a.approx_eq(t.b) {
                        (s.a, s.b, t.a)
                    } else if s.b.approx_eq(t.a) {
                        (s.b, s.a, t.b)
                    } else {
                        (s.b, s.a, t.a)
                    };
                    let overlap = orientation(common, u, v) == Orientation::Collinear && (u - common).dot(v - common) > 0.0;
                    if overlap {
                        return Err(Error::SegmentsIntersect(i, j));
                    }
                    for p in [&mut segs[j].a, &mut segs[j].b] {
                        if p.approx_eq(common) {
                            *p = common;
                        }
                    }
                }
                _ => return Err(Error::SegmentsIntersect(i, j)),
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn seg(ax: f64, ay: f64, bx: f64, by: f64) -> Segment {
        Segment::new(pt(ax, ay), pt(bx, by)).unwrap()
    }

    fn unit() -> BBox {
        BBox::new(0., 0., 1., 1.).unwrap()
    }

    #[test]
    fn empty_map_is_the_box() {
        let m = TrapezoidalMap::build(&[], Some(unit())).unwrap();
        assert_eq!(m.trapezoids().len(), 1);
        assert!(m.extensions().is_empty());
        assert_eq!(m.locate(pt(0.3, 0.7)).unwrap(), 0);
        let t = m.trapezoids()[0];
        assert_eq!((t.top, t.bottom, t.leftp, t.rightp), (Boundary::Top, Boundary::Bottom, None, None));
    }

    #[test]
    fn one_segment_gives_four_trapezoids() {
        let m = TrapezoidalMap::build(&[seg(0.2, 0.5, 0.8, 0.6)], Some(unit())).unwrap();
        let traps = m.trapezoids();
        assert_eq!(traps.len(), 4);
        let area: f64 = traps.iter().map(|t| m.trapezoid_area(t)).sum();
        assert!((area - 1.0).abs() < 1e-12);
        // left slab 0.2, right slab 0.2, above (0.6 wide, mean height 0.45), below (mean height 0.55)
        let areas: Vec<f64> = traps.iter().map(|t| m.trapezoid_area(t)).collect();
        let expect = [0.2, 0.6 * 0.45, 0.6 * 0.55, 0.2];
        for e in expect {
            assert!(areas.iter().any(|a| (a - e).abs() < 1e-12), "missing area {e} in {areas:?}");
        }
        assert_eq!(m.extensions().len(), 2);
        for e in m.extensions() {
            assert_eq!(e.up.target, Boundary::Top);
            assert_eq!(e.down.target, Boundary::Bottom);
        }
        let above = m.locate(pt(0.5, 0.9)).unwrap();
        assert_eq!(traps[above].bottom, Boundary::Segment(0));
        assert_eq!(traps[above].top, Boundary::Top);
        assert_eq!(traps[above].leftp, Some(pt(0.2, 0.5)));
        assert_eq!(traps[above].rightp, Some(pt(0.8, 0.6)));
    }

    #[test]
    fn chain_shares_one_extension_per_joint() {
        let segs = [seg(0.1, 0.2, 0.5, 0.5), seg(0.5, 0.5, 0.9, 0.3)];
        let m = TrapezoidalMap::build(&segs, Some(unit())).unwrap();
        assert_eq!(m.extensions().len(), 3);
        let area: f64 = m.trapezoids().iter().map(|t| m.trapezoid_area(t)).sum();
        assert!((area - 1.0).abs() < 1e-12);
        // left slab, right slab, above and below the chain on each side of the joint
        assert_eq!(m.trapezoids().len(), 6);
    }

    #[test]
    fn wedge_opening_right() {
        let segs = [seg(0.2, 0.5, 0.8, 0.8), seg(0.2, 0.5, 0.7, 0.2)];
        let m = TrapezoidalMap::build(&segs, Some(unit())).unwrap();
        let area: f64 = m.trapezoids().iter().map(|t| m.trapezoid_area(t)).sum();
        assert!((area - 1.0).abs() < 1e-12);
        let inside = m.locate(pt(0.5, 0.5)).unwrap();
        let t = m.trapezoids()[inside];
        assert_eq!((t.bottom, t.top), (Boundary::Segment(1), Boundary::Segment(0)));
        assert_eq!(t.leftp, Some(pt(0.2, 0.5)));
        assert_eq!(t.rightp, Some(pt(0.7, 0.2)));
    }

    #[test]
    fn shared_x_coordinates_are_fine() {
        let segs = [seg(0.2, 0.3, 0.6, 0.3), seg(0.2, 0.7, 0.6, 0.7)];
        let m = TrapezoidalMap::build(&segs, Some(unit())).unwrap();
        let area: f64 = m.trapezoids().iter().map(|t| m.trapezoid_area(t)).sum();
        assert!((area - 1.0).abs() < 1e-12);
        assert_eq!(m.trapezoids().len(), 5);
        let lower_left = m.extensions().iter().find(|e| e.origin == pt(0.2, 0.3)).unwrap();
        assert_eq!(lower_left.up.target, Boundary::Segment(1));
    }

    #[test]
    fn errors() {
        assert_eq!(
            TrapezoidalMap::build(&[seg(0.1, 0.1, 0.9, 0.9), seg(0.1, 0.9, 0.9, 0.1)], None),
            Err(Error::SegmentsIntersect(0, 1))
        );
        assert_eq!(TrapezoidalMap::build(&[seg(0.5, 0.1, 0.5, 0.9)], None), Err(Error::VerticalSegment(0)));
        assert_eq!(
            TrapezoidalMap::build(&[seg(0.5, 0.1, 1.5, 0.9)], Some(unit())),
            Err(Error::SegmentOutsideBBox(0))
        );
        // collinear overlap through a shared endpoint
        assert_eq!(
            TrapezoidalMap::build(&[seg(0.1, 0.1, 0.5, 0.1), seg(0.1, 0.1, 0.9, 0.1)], None),
            Err(Error::SegmentsIntersect(0, 1))
        );
        let m = TrapezoidalMap::build(&[seg(0.2, 0.5, 0.8, 0.6)], Some(unit())).unwrap();
        assert_eq!(m.locate(pt(0.2, 0.9)), Err(Error::DegenerateQuery));
        assert_eq!(m.locate(pt(0.5, 0.55)), Err(Error::DegenerateQuery));
        assert_eq!(m.locate(pt(1.5, 0.5)), Err(Error::QueryOutsideBBox));
    }

    #[test]
    fn default_bbox_pads_ten_percent() {
        let m = TrapezoidalMap::build(&[seg(0.0, 0.0, 10.0, 5.0)], None).unwrap();
        assert_eq!(m.bbox(), BBox { xmin: -1.0, ymin: -0.5, xmax: 11.0, ymax: 5.5 });
        let flat = TrapezoidalMap::build(&[seg(0.0, 1.0, 10.0, 1.0)], None).unwrap();
        assert_eq!(flat.bbox(), BBox { xmin: -1.0, ymin: 0.0, xmax: 11.0, ymax: 2.0 });
    }

    #[test]
    fn dump_has_expected_keys() {
        let m = TrapezoidalMap::build(&[seg(0.2, 0.5, 0.8, 0.6)], Some(unit())).unwrap();
        let v: serde_json::Value = serde_json::from_str(&m.to_json()).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 4);
        assert_eq!(v["extensions"][0]["up_target"], "top");
        assert_eq!(v["trapezoids"].as_array().unwrap().len(), 4);
    }
}
