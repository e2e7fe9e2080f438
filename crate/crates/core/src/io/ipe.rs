//! Ipe 7 documents: a single page using only `path`, `use` and `group`
//! elements and no stylesheet. Coordinates are written unchanged (Ipe's y
//! axis already points up), rounded to six decimals with trailing zeros cut.

use super::{Color, Figure, Overlay, RenderStyle, Scene, Shape};
use crate::error::Result;
use std::fmt::Write;

pub const IPE_VERSION: &str = "70218";
pub const CREATOR: &str = "geoforge";

fn coord(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    match s {
        "-0" | "" => "0".to_string(),
        _ => s.to_string(),
    }
}

fn color(c: Color) -> String {
    if c == Color::BLACK {
        return "black".to_string();
    }
    let f = |v: u8| {
        let s = format!("{:.3}", v as f64 / 255.0);
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s.is_empty() { "0".to_string() } else { s.to_string() }
    };
    format!("{} {} {}", f(c.0), f(c.1), f(c.2))
}

fn write_shape(out: &mut String, shape: &Shape, style: &RenderStyle) {
    match shape {
        Shape::Mark { at, color: c } => {
            writeln!(
                out,
                "<use name=\"mark/disk(sx)\" pos=\"{} {}\" size=\"normal\" stroke=\"{}\"/>",
                coord(at.x),
                coord(at.y),
                color(*c)
            )
            .unwrap();
        }
        Shape::Path { points, closed, stroke, fill } => {
            out.push_str(&format!("<path stroke=\"{}\"", color(*stroke)));
            if let Some(f) = fill {
                out.push_str(&format!(" fill=\"{}\"", color(*f)));
            }
            if style.stroke_width != 1.0 {
                out.push_str(&format!(" pen=\"{}\"", coord(style.stroke_width)));
            }
            out.push_str(">\n");
            for (i, p) in points.iter().enumerate() {
                writeln!(out, "{} {} {}", coord(p.x), coord(p.y), if i == 0 { "m" } else { "l" }).unwrap();
            }
            if *closed {
                out.push_str("h\n");
            }
            out.push_str("</path>\n");
        }
    }
}

pub fn emit_ipe(scene: &Scene, results: Option<&Overlay>, style: &RenderStyle) -> Result<String> {
    let fig = Figure::build(scene, results, style)?;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\"?>\n");
    out.push_str("<!DOCTYPE ipe SYSTEM \"ipe.dtd\">\n");
    writeln!(out, "<ipe version=\"{IPE_VERSION}\" creator=\"{CREATOR}\">").unwrap();
    out.push_str("<page>\n");
    for shape in &fig.scene {
        write_shape(&mut out, shape, style);
    }
    if !fig.overlay.is_empty() {
        out.push_str("<group>\n");
        for shape in &fig.overlay {
            write_shape(&mut out, shape, style);
        }
        out.push_str("</group>\n");
    }
    out.push_str("</page>\n</ipe>\n");
    Ok(out)
}
