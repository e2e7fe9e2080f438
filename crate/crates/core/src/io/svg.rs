//! SVG 1.1 figures. The y axis is flipped so the figure reads in math
//! orientation; coordinates are printed with six fixed decimals.

use super::{Figure, Overlay, RenderStyle, Scene, Shape};
use crate::error::Result;
use std::fmt::Write;

const CANVAS_PX: f64 = 800.0;

fn coord(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

pub fn emit_svg(scene: &Scene, results: Option<&Overlay>, style: &RenderStyle) -> Result<String> {
    let fig = Figure::build(scene, results, style)?;
    let b = fig.bounds;
    let (px, py) = (0.05 * b.width(), 0.05 * b.height());
    let (vx, vy) = (b.xmin - px, -(b.ymax + py));
    let (vw, vh) = (b.width() + 2.0 * px, b.height() + 2.0 * py);
    // user units per output pixel
    let unit = vw.max(vh) / CANVAS_PX;
    let (width, height) = (vw / unit, vh / unit);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        coord(width),
        coord(height),
        coord(vx),
        coord(vy),
        coord(vw),
        coord(vh)
    )
    .unwrap();
    let stroke_width = coord(style.stroke_width * unit);
    let radius = coord(style.mark_radius * unit);
    for group in [&fig.scene, &fig.overlay] {
        if group.is_empty() {
            continue;
        }
        out.push_str("<g>\n");
        // paths below marks
        for shape in group {
            if let Shape::Path { points, closed, stroke, fill } = shape {
                let mut d = String::new();
                for (i, p) in points.iter().enumerate() {
                    let _ = write!(d, "{}{} {}", if i == 0 { "M" } else { " L" }, coord(p.x), coord(-p.y));
                }
                if *closed {
                    d.push_str(" Z");
                }
                let fill = fill.map_or_else(|| "none".to_string(), |c| c.hex());
                writeln!(
                    out,
                    "<path d=\"{d}\" fill=\"{fill}\" stroke=\"{}\" stroke-width=\"{stroke_width}\"/>",
                    stroke.hex()
                )
                .unwrap();
            }
        }
        for shape in group {
            if let Shape::Mark { at, color } = shape {
                writeln!(
                    out,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"{radius}\" fill=\"{}\"/>",
                    coord(at.x),
                    coord(-at.y),
                    color.hex()
                )
                .unwrap();
            }
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}
