use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("invalid coordinate ({x}, {y}): must be finite with magnitude <= 1e6")]
    InvalidCoordinate { x: f64, y: f64 },
    #[error("degenerate segment: endpoints coincide")]
    DegenerateSegment,
    #[error("invalid bbox: requires xmin < xmax and ymin < ymax")]
    InvalidBBox,
    #[error("halfplane normal must have unit length")]
    NonUnitNormal,
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon has repeated consecutive vertex at index {0}")]
    RepeatedVertex(usize),
    #[error("polygon is not simple: edges {0} and {1} intersect")]
    SelfIntersecting(usize, usize),
    #[error("polygon has zero area")]
    DegeneratePolygon,
    #[error("clip requires convex polygon")]
    NonConvex,
    #[error("degenerate angle: apex coincides with an endpoint")]
    DegenerateAngle,

    #[error("duplicate site ({x}, {y})")]
    DuplicateSite { x: f64, y: f64 },
    #[error("capacity must be at least 1")]
    ZeroCapacity,
    #[error("point ({x}, {y}) outside region")]
    PointOutsideRegion { x: f64, y: f64 },

    #[error("segments intersect: {0} and {1}")]
    SegmentsIntersect(usize, usize),
    #[error("vertical segment unsupported (segment {0})")]
    VerticalSegment(usize),
    #[error("segment {0} has an endpoint outside the bbox")]
    SegmentOutsideBBox(usize),
    #[error("degenerate query: point lies on a segment or vertical extension")]
    DegenerateQuery,
    #[error("query point outside bbox")]
    QueryOutsideBBox,

    #[error("duplicate point ({x}, {y})")]
    DuplicatePoint { x: f64, y: f64 },
    #[error("beta must be a finite positive number, got {0}")]
    InvalidBeta(f64),
    #[error("need at least 2 points, got {0}")]
    TooFewPoints(usize),

    #[error("delta must lie in (0, 0.5], got {0}")]
    InvalidDelta(f64),
    #[error("line does not cut polygon")]
    LineMissesPolygon,
    #[error("direction count must be at least 3, got {0}")]
    TooFewDirections(usize),

    #[error("ear clipping stalled with {0} vertices remaining")]
    EarClippingStalled(usize),
    #[error("sample count must be at least 1")]
    ZeroSampleCount,

    #[error("depth cap exceeded: {depth} > {max}")]
    DepthCapExceeded { depth: u32, max: u32 },
    #[error("fractal seed must be a triangle, got {0} vertices")]
    NotATriangle(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid {kind} {index}: {source}")]
    Validation {
        kind: &'static str,
        index: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("nothing to render")]
    NothingToRender,
}
