//! Scene input, result dumps and figure output.
//!
//! A [`Scene`] is read from JSON; a module result is wrapped in an
//! [`Overlay`] which knows its own JSON dump and how to draw itself. Both SVG
//! and Ipe writers render the same list of [`Shape`]s, so a figure is a pure
//! view of the data: nothing drawn feeds back into the dumps.

pub mod ipe;
pub mod json;
mod overlay;
mod scene;
pub mod svg;

pub use overlay::Overlay;
pub use scene::{parse_scene, Scene};

use crate::error::{Error, Result};
use crate::geom::{BBox, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Color(pub u8, pub u8, pub u8);

impl Color {
    pub const BLACK: Color = Color(0, 0, 0);

    pub fn hex(self) -> String {
        format!("#{:02x}{:02x}{:02x}", self.0, self.1, self.2)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Stroke width in output pixels (SVG) or points (Ipe).
    pub stroke_width: f64,
    /// Colors for successive overlay layers; cycled when exhausted.
    pub palette: Vec<Color>,
    /// Point mark radius in output pixels.
    pub mark_radius: f64,
}

impl RenderStyle {
    pub fn new(stroke_width: f64, palette: Vec<Color>, mark_radius: f64) -> Result<Self> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(stroke_width) || !positive(mark_radius) || palette.is_empty() {
            return Err(Error::Malformed("render style needs positive sizes and a nonempty palette".into()));
        }
        Ok(RenderStyle { stroke_width, palette, mark_radius })
    }

    pub fn color(&self, i: usize) -> Color {
        self.palette[i % self.palette.len()]
    }
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            stroke_width: 1.0,
            palette: vec![
                Color(0x1f, 0x77, 0xb4),
                Color(0xd6, 0x27, 0x28),
                Color(0x2c, 0xa0, 0x2c),
                Color(0xff, 0x7f, 0x0e),
                Color(0x94, 0x67, 0xbd),
                Color(0x8c, 0x56, 0x4b),
            ],
            mark_radius: 3.0,
        }
    }
}

/// Drawing primitive shared by the SVG and Ipe writers.
#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Mark { at: Point, color: Color },
    Path { points: Vec<Point>, closed: bool, stroke: Color, fill: Option<Color> },
}

impl Shape {
    fn points(&self) -> &[Point] {
        match self {
            Shape::Mark { at, .. } => std::slice::from_ref(at),
            Shape::Path { points, .. } => points,
        }
    }
}

/// Everything a writer draws: scene shapes first, then the overlay.
pub(crate) struct Figure {
    pub scene: Vec<Shape>,
    pub overlay: Vec<Shape>,
    pub bounds: BBox,
}

impl Figure {
    pub(crate) fn build(scene: &Scene, results: Option<&Overlay>, style: &RenderStyle) -> Result<Figure> {
        let scene_shapes = scene.shapes();
        let overlay = results.map(|r| r.shapes(style)).unwrap_or_default();
        if scene_shapes.is_empty() && overlay.is_empty() {
            return Err(Error::NothingToRender);
        }
        let bounds = match scene.bbox {
            Some(b) => b,
            None => {
                let all = scene_shapes.iter().chain(&overlay).flat_map(|s| s.points().iter().copied());
                let (lo, hi) = BBox::bounding(all).expect("at least one shape");
                let (mut w, mut h) = (hi.x - lo.x, hi.y - lo.y);
                if w <= 0.0 {
                    w = if h > 0.0 { h } else { 1.0 };
                }
                if h <= 0.0 {
                    h = w;
                }
                let c = lo.midpoint(hi);
                BBox { xmin: c.x - w / 2.0, ymin: c.y - h / 2.0, xmax: c.x + w / 2.0, ymax: c.y + h / 2.0 }
            }
        };
        Ok(Figure { scene: scene_shapes, overlay, bounds })
    }
}
