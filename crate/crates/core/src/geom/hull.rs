use super::{orientation, Orientation, Point};
use crate::error::{Error, Result};

/// Strict convex hull (Andrew's monotone chain).
///
/// Vertices come out counterclockwise starting at the lexicographically
/// smallest point. Points on hull edges are dropped. A single distinct point
/// yields `[p]` and a collinear set yields its two extreme points.
pub fn convex_hull(points: &[Point]) -> Result<Vec<Point>> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut pts = points.to_vec();
    pts.sort_by(Point::lex_cmp);
    pts.dedup_by(|a, b| a.approx_eq(*b));
    if pts.len() <= 2 {
        return Ok(pts);
    }

    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2
            && orientation(hull[hull.len() - 2], hull[hull.len() - 1], p) != Orientation::CounterClockwise
        {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && orientation(hull[hull.len() - 2], hull[hull.len() - 1], p) != Orientation::CounterClockwise
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    Ok(hull)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{orientation_det, EPS_AREA};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn drops_interior_point() {
        let pts = [pt(0., 0.), pt(1., 0.), pt(1., 1.), pt(0., 1.), pt(0.5, 0.5)];
        assert_eq!(convex_hull(&pts).unwrap(), vec![pt(0., 0.), pt(1., 0.), pt(1., 1.), pt(0., 1.)]);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(convex_hull(&[pt(0., 0.)]).unwrap(), vec![pt(0., 0.)]);
        assert_eq!(convex_hull(&[]), Err(Error::EmptyPointSet));
        let line = [pt(2., 2.), pt(0., 0.), pt(1., 1.), pt(3., 3.)];
        assert_eq!(convex_hull(&line).unwrap(), vec![pt(0., 0.), pt(3., 3.)]);
        assert_eq!(convex_hull(&[pt(1., 1.), pt(1., 1.)]).unwrap(), vec![pt(1., 1.)]);
    }

    #[test]
    fn collinear_boundary_points_excluded() {
        let pts = [pt(0., 0.), pt(0.5, 0.), pt(1., 0.), pt(1., 1.), pt(0., 1.)];
        assert_eq!(convex_hull(&pts).unwrap().len(), 4);
    }

    /// O(n^3) oracle: `p -> q` is a hull edge when every other point is
    /// strictly left of it or lies on the closed segment.
    fn brute_force_hull_edges(pts: &[Point]) -> Vec<(Point, Point)> {
        let mut edges = Vec::new();
        for &p in pts {
            for &q in pts {
                if p == q {
                    continue;
                }
                let ok = pts.iter().all(|&r| {
                    let d = orientation_det(p, q, r);
                    d > EPS_AREA || (d.abs() <= EPS_AREA && (r - p).dot(q - p) >= 0.0 && (r - q).dot(p - q) >= 0.0)
                });
                if ok {
                    edges.push((p, q));
                }
            }
        }
        edges
    }

    #[test]
    fn random_hull_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let pts: Vec<Point> = (0..100).map(|_| pt(rng.random(), rng.random())).collect();
            let hull = convex_hull(&pts).unwrap();
            let edges = brute_force_hull_edges(&pts);
            assert_eq!(edges.len(), hull.len());
            for i in 0..hull.len() {
                let e = (hull[i], hull[(i + 1) % hull.len()]);
                assert!(edges.contains(&e), "missing hull edge {e:?}");
                assert_eq!(
                    orientation(hull[i], hull[(i + 1) % hull.len()], hull[(i + 2) % hull.len()]),
                    Orientation::CounterClockwise
                );
            }
            let poly = crate::geom::Polygon::new(hull.clone()).unwrap();
            for &p in &pts {
                assert_ne!(crate::geom::point_in_polygon(p, &poly), crate::geom::Location::Outside);
            }
            let min = pts.iter().copied().min_by(Point::lex_cmp).unwrap();
            assert_eq!(hull[0], min);
        }
    }
}
