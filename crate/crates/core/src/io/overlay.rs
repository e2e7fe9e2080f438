use super::{Color, RenderStyle, Shape};
use crate::beta_skeleton::ProximityGraph;
use crate::floating_body::FloatingBodyResult;
use crate::fractals::FractalOutput;
use crate::geom::{BBox, Point};
use crate::onion::OnionDecomposition;
use crate::quadtree::{self, PointQuadtree, PrKind, PrQuadtree};
use crate::trapmap::TrapezoidalMap;
use crate::triangulation::Triangulation;

/// One module result, ready to dump or draw.
#[derive(Debug, Clone, PartialEq)]
pub enum Overlay {
    PointQuadtree(PointQuadtree),
    PrQuadtree(PrQuadtree),
    Trapmap(TrapezoidalMap),
    Onion(OnionDecomposition),
    Skeleton(ProximityGraph),
    FloatingBody(FloatingBodyResult),
    Triangulation { triangulation: Triangulation, samples: Vec<Point> },
    Fractal(FractalOutput),
}

fn open(points: Vec<Point>, stroke: Color) -> Shape {
    Shape::Path { points, closed: false, stroke, fill: None }
}

fn closed(points: Vec<Point>, stroke: Color) -> Shape {
    Shape::Path { points, closed: true, stroke, fill: None }
}

impl Overlay {
    pub fn to_json(&self) -> String {
        match self {
            Overlay::PointQuadtree(t) => t.to_array(),
            Overlay::PrQuadtree(t) => t.to_array(),
            Overlay::Trapmap(m) => m.to_json(),
            Overlay::Onion(o) => o.to_json(),
            Overlay::Skeleton(g) => g.to_json(),
            Overlay::FloatingBody(f) => f.to_json(),
            Overlay::Triangulation { triangulation, samples } => triangulation.to_json(samples),
            Overlay::Fractal(f) => f.to_json(),
        }
    }

    pub(crate) fn shapes(&self, style: &RenderStyle) -> Vec<Shape> {
        let mut out = Vec::new();
        match self {
            Overlay::PointQuadtree(t) => {
                let Some(root) = t.root() else { return out };
                let mut stack = vec![(root, quadtree::default_region(&t.collect()), 0usize)];
                while let Some((id, region, depth)) = stack.pop() {
                    let node = t.node(id);
                    let s = node.site;
                    let color = style.color(depth);
                    out.push(open(vec![Point::new(region.xmin, s.y), Point::new(region.xmax, s.y)], color));
                    out.push(open(vec![Point::new(s.x, region.ymin), Point::new(s.x, region.ymax)], color));
                    for (slot, child) in node.children.iter().enumerate().rev() {
                        if let Some(c) = child {
                            stack.push((*c, split_at(&region, s, slot), depth + 1));
                        }
                    }
                }
            }
            Overlay::PrQuadtree(t) => {
                for id in t.leaves() {
                    let node = t.node(id);
                    if let PrKind::Leaf(_) = node.kind {
                        out.push(closed(node.region.corners().to_vec(), style.color(node.depth as usize)));
                    }
                }
            }
            Overlay::Trapmap(m) => {
                out.push(closed(m.bbox().corners().to_vec(), style.color(0)));
                for s in m.segments() {
                    out.push(open(vec![s.a, s.b], style.color(0)));
                }
                for e in m.extensions() {
                    out.push(open(vec![e.down.point, e.up.point], style.color(1)));
                }
            }
            Overlay::Onion(o) => {
                for (i, layer) in o.layers().iter().enumerate() {
                    match layer.len() {
                        1 => {}
                        2 => out.push(open(layer.clone(), style.color(i))),
                        _ => out.push(closed(layer.clone(), style.color(i))),
                    }
                }
            }
            Overlay::Skeleton(g) => {
                for &(i, j) in &g.edges {
                    out.push(open(vec![g.vertices[i], g.vertices[j]], style.color(0)));
                }
            }
            Overlay::FloatingBody(f) => {
                out.push(closed(f.dupin.clone(), style.color(0)));
                if let Some(p) = &f.convex_fb {
                    out.push(closed(p.vertices().to_vec(), style.color(1)));
                }
            }
            Overlay::Triangulation { triangulation, samples } => {
                for t in 0..triangulation.triangles().len() {
                    out.push(closed(triangulation.triangle_points(t).to_vec(), style.color(0)));
                }
                for &p in samples {
                    out.push(Shape::Mark { at: p, color: style.color(1) });
                }
            }
            Overlay::Fractal(f) => {
                let c = style.color(0);
                for cell in &f.cells {
                    out.push(Shape::Path { points: cell.vertices().to_vec(), closed: true, stroke: c, fill: Some(c) });
                }
            }
        }
        out
    }
}

fn split_at(region: &BBox, site: Point, slot: usize) -> BBox {
    let west = slot == quadtree::NW || slot == quadtree::SW;
    let north = slot == quadtree::NW || slot == quadtree::NE;
    BBox {
        xmin: if west { region.xmin } else { site.x },
        xmax: if west { site.x } else { region.xmax },
        ymin: if north { site.y } else { region.ymin },
        ymax: if north { region.ymax } else { site.y },
    }
}
