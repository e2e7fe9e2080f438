//! Canonical number and coordinate formatting for the JSON dumps, plus
//! small helpers for reading them back.

use crate::error::{Error, Result};
use crate::geom::Point;
use serde_json::Value;

/// Renders `x` rounded to 12 significant digits with no trailing zeros.
pub fn num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("float formatting round-trips");
    if rounded == 0.0 {
        return "0".to_string();
    }
    // Display prints the shortest string that round-trips, which for a value
    // parsed from 12 significant digits has at most 12 of them.
    format!("{rounded}")
}

/// Renders `x` exactly (shortest round-trip representation).
pub fn num_exact(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{x}")
}

pub fn point(p: Point) -> String {
    format!("[{},{}]", num(p.x), num(p.y))
}

pub fn point_exact(p: Point) -> String {
    format!("[{},{}]", num_exact(p.x), num_exact(p.y))
}

pub fn points(ps: &[Point]) -> String {
    list(ps.iter().map(|&p| point(p)))
}

pub fn list(items: impl IntoIterator<Item = String>) -> String {
    let items: Vec<String> = items.into_iter().collect();
    format!("[{}]", items.join(","))
}

pub(crate) fn parse_value(text: &str) -> Result<Value> {
    let mut de = serde_json::Deserializer::from_str(text);
    // point quadtrees built from sorted input nest as deep as they have points
    de.disable_recursion_limit();
    let v = serde::Deserialize::deserialize(&mut de).map_err(parse_error)?;
    de.end().map_err(parse_error)?;
    Ok(v)
}

pub(crate) fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

pub(crate) fn malformed(what: impl Into<String>) -> Error {
    Error::Malformed(what.into())
}

pub(crate) fn as_f64(v: &Value) -> Result<f64> {
    v.as_f64().ok_or_else(|| malformed(format!("expected number, got {v}")))
}

pub(crate) fn as_array(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| malformed(format!("expected array, got {v}")))
}

pub(crate) fn as_point(v: &Value) -> Result<Point> {
    match as_array(v)?.as_slice() {
        [x, y] => Ok(Point::new(as_f64(x)?, as_f64(y)?)),
        _ => Err(malformed("expected [x,y] pair")),
    }
}

pub(crate) fn as_points(v: &Value) -> Result<Vec<Point>> {
    as_array(v)?.iter().map(as_point).collect()
}

pub(crate) fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| malformed(format!("missing key `{key}`")))
}
