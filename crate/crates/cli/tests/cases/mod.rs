//! Helpers and the golden invocation list shared by the CLI tests.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn here(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(rel)
}

pub fn geoforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geoforge")).args(args).output().unwrap()
}

pub fn fixture(name: &str) -> String {
    here("fixtures").join(name).to_string_lossy().into_owned()
}

/// One invocation per subcommand, each checked byte for byte.
pub fn golden_cases() -> Vec<(&'static str, Vec<String>)> {
    let f = fixture;
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    vec![
        ("quadtree.json", [s(&["quadtree", "--input"]), vec![f("points9.json")]].concat()),
        ("pr-quadtree.json", [s(&["pr-quadtree", "--capacity", "2", "--input"]), vec![f("points9.json")]].concat()),
        ("trapmap.ipe", [s(&["trapmap", "--format", "ipe", "--input"]), vec![f("segments.json")]].concat()),
        ("onion.svg", [s(&["onion", "--format", "svg", "--input"]), vec![f("points9.json")]].concat()),
        ("beta-skeleton.json", [s(&["beta-skeleton", "--beta", "1.5", "--input"]), vec![f("points9.json")]].concat()),
        (
            "floating-body.json",
            [s(&["floating-body", "--delta", "0.2", "--directions", "24", "--input"]), vec![f("hexagon.json")]].concat(),
        ),
        ("triangulate.svg", [s(&["triangulate", "--format", "svg", "--input"]), vec![f("comb.json")]].concat()),
        ("sample.json", [s(&["sample", "--count", "20", "--seed", "7", "--input"]), vec![f("comb.json")]].concat()),
        (
            "sierpinski-triangle.ipe",
            [s(&["sierpinski-triangle", "--depth", "2", "--format", "ipe", "--input"]), vec![f("triangle.json")]].concat(),
        ),
        ("sierpinski-carpet.json", s(&["sierpinski-carpet", "--depth", "1", "--bbox", "0,0,9,9"])),
    ]
}
