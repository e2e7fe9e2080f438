//! Onion decomposition (convex layers).
//!
//! Each round takes every point on the boundary of the current convex hull,
//! hull vertices and points lying on hull edges alike, as one layer.

use crate::error::{Error, Result};
use crate::geom::{convex_hull, orientation, Orientation, Point};
use crate::io::json;

#[derive(Debug, Clone, PartialEq)]
pub struct OnionDecomposition {
    layers: Vec<Vec<Point>>,
}

impl OnionDecomposition {
    pub fn build(points: &[Point]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let mut remaining = points.to_vec();
        for p in &remaining {
            Point::checked(p.x, p.y)?;
        }
        remaining.sort_by(Point::lex_cmp);
        if let Some(w) = remaining.windows(2).find(|w| w[0].approx_eq(w[1])) {
            return Err(Error::DuplicatePoint { x: w[1].x, y: w[1].y });
        }

        let mut layers = Vec::new();
        while !remaining.is_empty() {
            let hull = convex_hull(&remaining)?;
            let (layer, rest) = peel(&hull, remaining);
            layers.push(layer);
            remaining = rest;
        }
        Ok(OnionDecomposition { layers })
    }

    /// Layers from the outside in, each counterclockwise from its
    /// lexicographically smallest point.
    pub fn layers(&self) -> &[Vec<Point>] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn to_json(&self) -> String {
        json::list(self.layers.iter().map(|l| json::points(l)))
    }
}

/// Splits `points` into those on the boundary of `hull`, in boundary order,
/// and those strictly inside.
fn peel(hull: &[Point], points: Vec<Point>) -> (Vec<Point>, Vec<Point>) {
    let h = hull.len();
    if h <= 2 {
        // degenerate hull: every remaining point is on it
        let mut layer = points;
        if h == 2 {
            let (a, b) = (hull[0], hull[1]);
            layer.sort_by(|p, q| (*p - a).dot(b - a).total_cmp(&(*q - a).dot(b - a)));
        }
        return (layer, Vec::new());
    }
    let mut on_boundary: Vec<(usize, f64, Point)> = Vec::new();
    let mut inside = Vec::new();
    for p in points {
        let edge = (0..h).find(|&i| orientation(hull[i], hull[(i + 1) % h], p) != Orientation::CounterClockwise);
        match edge {
            Some(i) => {
                let (a, b) = (hull[i], hull[(i + 1) % h]);
                let t = (p - a).dot(b - a) / (b - a).dot(b - a);
                // a vertex is the start of its outgoing edge, not the end of the incoming one
                if t >= 1.0 - 1e-12 {
                    on_boundary.push(((i + 1) % h, 0.0, p));
                } else {
                    on_boundary.push((i, t, p));
                }
            }
            None => inside.push(p),
        }
    }
    on_boundary.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.total_cmp(&y.1)));
    (on_boundary.into_iter().map(|(_, _, p)| p).collect(), inside)
}
