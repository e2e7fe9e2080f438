//! Planar point-set and polygon structures.
//!
//! Every structure here is built from the primitives in [`geom`]:
//!
//! - [`quadtree`]: point quadtrees and point-region quadtrees with an array dump.
//! - [`trapmap`]: trapezoidal maps of non-crossing segments inside a box.
//! - [`onion`]: convex layers of a point set.
//! - [`beta_skeleton`]: beta-skeletons, with Gabriel graph and RNG as special cases.
//! - [`floating_body`]: Dupin and convex floating bodies of convex polygons.
//! - [`triangulation`]: ear clipping and area-weighted barycentric sampling.
//! - [`fractals`]: Sierpinski triangle and carpet cells.
//! - [`io`]: scene input, JSON dumps, SVG and Ipe output.
//!
//! Data-parallel loops run on rayon when the `parallel` feature is enabled
//! (the default). Results never depend on the schedule; see [`Execution`].

pub mod beta_skeleton;
pub mod error;
pub mod exec;
pub mod floating_body;
pub mod fractals;
pub mod geom;
pub mod io;
pub mod onion;
pub mod quadtree;
pub mod trapmap;
pub mod triangulation;

pub use error::{Error, Result};
pub use exec::Execution;
pub use geom::{BBox, Halfplane, Location, Orientation, Point, Polygon, Segment};
