use super::{json, Color, Shape};
use crate::error::{Error, Result};
use crate::geom::{BBox, Point, Polygon, Segment};
use serde::Deserialize;

/// Input geometry for one invocation.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Scene {
    pub points: Vec<Point>,
    pub segments: Vec<Segment>,
    pub polygons: Vec<Polygon>,
    pub bbox: Option<BBox>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScene {
    #[serde(default)]
    points: Vec<[f64; 2]>,
    #[serde(default)]
    segments: Vec<[[f64; 2]; 2]>,
    #[serde(default)]
    polygons: Vec<Vec<[f64; 2]>>,
    #[serde(default)]
    bbox: Option<[f64; 4]>,
}

fn invalid(kind: &'static str, index: usize) -> impl FnOnce(Error) -> Error {
    move |e| Error::Validation { kind, index, source: Box::new(e) }
}

/// Parses and validates a scene document. Polygons given clockwise are
/// stored counterclockwise.
pub fn parse_scene(text: &str) -> Result<Scene> {
    let raw: RawScene = serde_json::from_str(text).map_err(json::parse_error)?;
    let point = |[x, y]: [f64; 2]| Point::checked(x, y);

    let points = raw
        .points
        .into_iter()
        .enumerate()
        .map(|(i, p)| point(p).map_err(invalid("point", i)))
        .collect::<Result<Vec<_>>>()?;
    let segments = raw
        .segments
        .into_iter()
        .enumerate()
        .map(|(i, [a, b])| {
            (|| Segment::new(point(a)?, point(b)?))().map_err(invalid("segment", i))
        })
        .collect::<Result<Vec<_>>>()?;
    let polygons = raw
        .polygons
        .into_iter()
        .enumerate()
        .map(|(i, ring)| {
            (|| Polygon::new(ring.into_iter().map(point).collect::<Result<Vec<_>>>()?))().map_err(invalid("polygon", i))
        })
        .collect::<Result<Vec<_>>>()?;
    let bbox = raw
        .bbox
        .map(|[a, b, c, d]| BBox::new(a, b, c, d).map_err(invalid("bbox", 0)))
        .transpose()?;
    Ok(Scene { points, segments, polygons, bbox })
}

impl Scene {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.segments.is_empty() && self.polygons.is_empty()
    }

    /// Serializes with exact (shortest round-trip) numbers; empty lists are omitted.
    pub fn to_json(&self) -> String {
        let mut parts = Vec::new();
        if !self.points.is_empty() {
            parts.push(format!("\"points\":{}", json::list(self.points.iter().map(|&p| json::point_exact(p)))));
        }
        if !self.segments.is_empty() {
            let segs = self
                .segments
                .iter()
                .map(|s| format!("[{},{}]", json::point_exact(s.a), json::point_exact(s.b)));
            parts.push(format!("\"segments\":{}", json::list(segs)));
        }
        if !self.polygons.is_empty() {
            let polys = self
                .polygons
                .iter()
                .map(|p| json::list(p.vertices().iter().map(|&v| json::point_exact(v))));
            parts.push(format!("\"polygons\":{}", json::list(polys)));
        }
        if let Some(b) = self.bbox {
            parts.push(format!("\"bbox\":{}", json::list([b.xmin, b.ymin, b.xmax, b.ymax].map(json::num_exact))));
        }
        format!("{{{}}}", parts.join(","))
    }

    pub(crate) fn shapes(&self) -> Vec<Shape> {
        let mut out = Vec::new();
        for p in &self.polygons {
            out.push(Shape::Path { points: p.vertices().to_vec(), closed: true, stroke: Color::BLACK, fill: None });
        }
        for s in &self.segments {
            out.push(Shape::Path { points: vec![s.a, s.b], closed: false, stroke: Color::BLACK, fill: None });
        }
        for &p in &self.points {
            out.push(Shape::Mark { at: p, color: Color::BLACK });
        }
        out
    }
}
