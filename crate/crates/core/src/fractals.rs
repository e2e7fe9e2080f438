//! Sierpinski triangle and carpet cells at a finite depth.
//!
//! Output is the list of surviving cells. Branches are generated in a fixed
//! order (triangle: corners in seed vertex order; carpet: grid rows north to
//! south, west to east, skipping the center), so the cell order does not
//! depend on the schedule.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geom::{BBox, Point, Polygon};
use crate::io::json;

pub const MAX_TRIANGLE_DEPTH: u32 = 12;
pub const MAX_CARPET_DEPTH: u32 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FractalKind {
    Triangle,
    Carpet,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FractalOutput {
    pub kind: FractalKind,
    pub depth: u32,
    pub cells: Vec<Polygon>,
}

impl FractalOutput {
    pub fn total_area(&self) -> f64 {
        self.cells.iter().map(Polygon::area).sum()
    }

    pub fn to_json(&self) -> String {
        let kind = match self.kind {
            FractalKind::Triangle => "triangle",
            FractalKind::Carpet => "carpet",
        };
        format!(
            "{{\"kind\":\"{kind}\",\"depth\":{},\"cells\":{}}}",
            self.depth,
            json::list(self.cells.iter().map(|c| json::points(c.vertices())))
        )
    }
}

pub fn sierpinski_triangle(seed: &Polygon, depth: u32) -> Result<FractalOutput> {
    sierpinski_triangle_with(seed, depth, Execution::default())
}

pub fn sierpinski_triangle_with(seed: &Polygon, depth: u32, exec: Execution) -> Result<FractalOutput> {
    if seed.len() != 3 {
        return Err(Error::NotATriangle(seed.len()));
    }
    if depth > MAX_TRIANGLE_DEPTH {
        return Err(Error::DepthCapExceeded { depth, max: MAX_TRIANGLE_DEPTH });
    }
    let v = seed.vertices();
    let root = [v[0], v[1], v[2]];
    let cells = if depth == 0 {
        vec![root]
    } else {
        let branches = exec.map_slice(&corner_triangles(root), |&t| {
            let mut out = Vec::with_capacity(3usize.pow(depth - 1));
            subdivide_triangle(t, depth - 1, &mut out);
            out
        });
        branches.into_iter().flatten().collect()
    };
    Ok(FractalOutput {
        kind: FractalKind::Triangle,
        depth,
        cells: cells.into_iter().map(|t| Polygon::from_ccw_unchecked(t.to_vec())).collect(),
    })
}

fn corner_triangles([a, b, c]: [Point; 3]) -> [[Point; 3]; 3] {
    let (ab, bc, ca) = (a.midpoint(b), b.midpoint(c), c.midpoint(a));
    [[a, ab, ca], [ab, b, bc], [ca, bc, c]]
}

fn subdivide_triangle(t: [Point; 3], depth: u32, out: &mut Vec<[Point; 3]>) {
    if depth == 0 {
        out.push(t);
        return;
    }
    for child in corner_triangles(t) {
        subdivide_triangle(child, depth - 1, out);
    }
}

pub fn sierpinski_carpet(seed: &BBox, depth: u32) -> Result<FractalOutput> {
    sierpinski_carpet_with(seed, depth, Execution::default())
}

pub fn sierpinski_carpet_with(seed: &BBox, depth: u32, exec: Execution) -> Result<FractalOutput> {
    let seed = BBox::new(seed.xmin, seed.ymin, seed.xmax, seed.ymax)?;
    if depth > MAX_CARPET_DEPTH {
        return Err(Error::DepthCapExceeded { depth, max: MAX_CARPET_DEPTH });
    }
    let cells = if depth == 0 {
        vec![seed]
    } else {
        let branches = exec.map_slice(&grid_cells(&seed), |b| {
            let mut out = Vec::with_capacity(8usize.pow(depth - 1));
            subdivide_carpet(*b, depth - 1, &mut out);
            out
        });
        branches.into_iter().flatten().collect()
    };
    Ok(FractalOutput {
        kind: FractalKind::Carpet,
        depth,
        cells: cells.iter().map(BBox::to_polygon).collect(),
    })
}

/// The eight outer cells of the 3x3 grid, north row first, west to east.
fn grid_cells(b: &BBox) -> Vec<BBox> {
    let xs = [b.xmin, b.xmin + b.width() / 3.0, b.xmin + 2.0 * b.width() / 3.0, b.xmax];
    let ys = [b.ymax, b.ymax - b.height() / 3.0, b.ymax - 2.0 * b.height() / 3.0, b.ymin];
    let mut out = Vec::with_capacity(8);
    for row in 0..3 {
        for col in 0..3 {
            if row == 1 && col == 1 {
                continue;
            }
            out.push(BBox { xmin: xs[col], xmax: xs[col + 1], ymin: ys[row + 1], ymax: ys[row] });
        }
    }
    out
}

fn subdivide_carpet(b: BBox, depth: u32, out: &mut Vec<BBox>) {
    if depth == 0 {
        out.push(b);
        return;
    }
    for child in grid_cells(&b) {
        subdivide_carpet(child, depth - 1, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn right_triangle() -> Polygon {
        Polygon::new(vec![Point::new(0., 0.), Point::new(1., 0.), Point::new(0., 1.)]).unwrap()
    }

    #[test]
    fn depth_zero_is_seed() {
        let t = sierpinski_triangle(&right_triangle(), 0).unwrap();
        assert_eq!(t.cells, vec![right_triangle()]);
        let unit = BBox::new(0., 0., 1., 1.).unwrap();
        let c = sierpinski_carpet(&unit, 0).unwrap();
        assert_eq!(c.cells, vec![unit.to_polygon()]);
    }

    #[test]
    fn triangle_depth_one() {
        let t = sierpinski_triangle(&right_triangle(), 1).unwrap();
        assert_eq!(t.cells.len(), 3);
        for c in &t.cells {
            assert!((c.area() - 0.125).abs() < 1e-15);
        }
        assert!((t.total_area() - 0.375).abs() < 1e-15);
    }

    #[test]
    fn carpet_depth_one() {
        let c = sierpinski_carpet(&BBox::new(0., 0., 1., 1.).unwrap(), 1).unwrap();
        assert_eq!(c.cells.len(), 8);
        for cell in &c.cells {
            let b = cell.bbox();
            assert!((b.width() - 1.0 / 3.0).abs() < 1e-15 && (b.height() - 1.0 / 3.0).abs() < 1e-15);
        }
        // north-west cell first
        assert_eq!(c.cells[0].bbox().ymax, 1.0);
        assert_eq!(c.cells[0].bbox().xmin, 0.0);
        assert!((c.total_area() - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn caps_and_seeds() {
        assert_eq!(
            sierpinski_triangle(&right_triangle(), 13),
            Err(Error::DepthCapExceeded { depth: 13, max: 12 })
        );
        assert!(sierpinski_carpet(&BBox::new(0., 0., 1., 1.).unwrap(), 8).is_err());
        let sq = BBox::new(0., 0., 1., 1.).unwrap().to_polygon();
        assert_eq!(sierpinski_triangle(&sq, 1), Err(Error::NotATriangle(4)));
        let bad = BBox { xmin: 1.0, ymin: 0.0, xmax: 0.0, ymax: 1.0 };
        assert_eq!(sierpinski_carpet(&bad, 1), Err(Error::InvalidBBox));
    }

    #[test]
    fn schedules_agree() {
        let a = sierpinski_triangle_with(&right_triangle(), 6, Execution::Sequential).unwrap();
        let b = sierpinski_triangle_with(&right_triangle(), 6, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        let unit = BBox::new(0., 0., 1., 1.).unwrap();
        let a = sierpinski_carpet_with(&unit, 3, Execution::Sequential).unwrap();
        let b = sierpinski_carpet_with(&unit, 3, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dump_format() {
        let c = sierpinski_carpet(&BBox::new(0., 0., 3., 3.).unwrap(), 0).unwrap();
        assert_eq!(c.to_json(), r#"{"kind":"carpet","depth":0,"cells":[[[0,0],[3,0],[3,3],[0,3]]]}"#);
    }
}
