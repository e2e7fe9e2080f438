//! Beta-skeletons by brute force over all pairs and witnesses (O(n^3)).
//!
//! For `beta <= 1` an edge `{p, q}` survives when every other point sees
//! `pq` at an angle below `theta(beta)`. For `beta >= 1` the default
//! [`SkeletonVariant::Lune`] forbids the intersection of the two disks of
//! diameter `beta * |pq|` through `p` and `q`, which yields the Gabriel graph at
//! `beta = 1` and the relative neighborhood graph at `beta = 2`. The
//! [`SkeletonVariant::Circle`] form keeps the angle test for every beta.
//! Witnesses on the boundary of the forbidden region remove the edge.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geom::{angle_at, Point};
use crate::io::json;
use std::f64::consts::PI;

pub const EPS_ANGLE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaParameter(f64);

impl BetaParameter {
    pub fn new(beta: f64) -> Result<Self> {
        if beta.is_finite() && beta > 0.0 {
            Ok(BetaParameter(beta))
        } else {
            Err(Error::InvalidBeta(beta))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Angle threshold: `arcsin(1/beta)` for `beta >= 1`, `pi - arcsin(beta)` below.
pub fn theta_of_beta(beta: BetaParameter) -> f64 {
    let b = beta.0;
    if b >= 1.0 {
        (1.0 / b).asin()
    } else {
        PI - b.asin()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SkeletonVariant {
    #[default]
    Lune,
    Circle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProximityGraph {
    pub vertices: Vec<Point>,
    /// Index pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl ProximityGraph {
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn to_json(&self) -> String {
        format!(
            "{{\"points\":{},\"edges\":{}}}",
            json::points(&self.vertices),
            json::list(self.edges.iter().map(|(i, j)| format!("[{i},{j}]")))
        )
    }
}

pub fn beta_skeleton(points: &[Point], beta: BetaParameter) -> Result<ProximityGraph> {
    beta_skeleton_with(points, beta, SkeletonVariant::Lune, Execution::default())
}

pub fn beta_skeleton_with(
    points: &[Point],
    beta: BetaParameter,
    variant: SkeletonVariant,
    exec: Execution,
) -> Result<ProximityGraph> {
    let n = points.len();
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    for p in points {
        Point::checked(p.x, p.y)?;
    }
    let mut sorted = points.to_vec();
    sorted.sort_by(Point::lex_cmp);
    if let Some(w) = sorted.windows(2).find(|w| w[0].approx_eq(w[1])) {
        return Err(Error::DuplicatePoint { x: w[1].x, y: w[1].y });
    }

    let use_lune = variant == SkeletonVariant::Lune && beta.0 > 1.0;
    let theta = theta_of_beta(beta);
    let kills = |i: usize, j: usize, k: usize| -> bool {
        let (p, q, r) = (points[i], points[j], points[k]);
        if use_lune {
            in_closed_lune(p, q, r, beta.0)
        } else {
            // distinct points keep the angle well defined
            angle_at(p, r, q).map_or(true, |a| a >= theta - EPS_ANGLE)
        }
    };

    let rows = exec.map_range(0..n, |i| {
        (i + 1..n)
            .filter(|&j| !(0..n).any(|k| k != i && k != j && kills(i, j, k)))
            .map(|j| (i, j))
            .collect::<Vec<_>>()
    });
    let edges = rows.into_iter().flatten().collect();
    Ok(ProximityGraph { vertices: points.to_vec(), edges })
}

/// Closed lune of parameter `beta >= 1`: both disks of radius `beta*d/2`
/// centered on the line `pq` and passing through `p` and `q` respectively.
fn in_closed_lune(p: Point, q: Point, r: Point, beta: f64) -> bool {
    let d2 = p.dist2(q);
    let radius2 = 0.25 * beta * beta * d2;
    let c1 = p.lerp(q, 0.5 * beta);
    let c2 = q.lerp(p, 0.5 * beta);
    let slack = EPS_ANGLE * radius2;
    r.dist2(c1) <= radius2 + slack && r.dist2(c2) <= radius2 + slack
}
