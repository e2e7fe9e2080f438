//! Point quadtrees and point-region (PR) quadtrees.
//!
//! Both variants split with the same tie-break: a point on a vertical
//! splitting line goes East, a point on a horizontal one goes North.
//! Children are always indexed NW, NE, SW, SE.

use crate::error::{Error, Result};
use crate::geom::{BBox, Point};
use crate::io::json;
use serde_json::Value;

/// PR leaves at this depth are never split further, even when over capacity.
pub const MAX_DEPTH: u32 = 32;

pub const NW: usize = 0;
pub const NE: usize = 1;
pub const SW: usize = 2;
pub const SE: usize = 3;

const CHILD_KEYS: [&str; 4] = ["nw", "ne", "sw", "se"];

/// Child slot of `p` relative to the split point `center`.
pub fn quadrant(p: Point, center: Point) -> usize {
    let east = p.x >= center.x;
    let north = p.y >= center.y;
    match (north, east) {
        (true, false) => NW,
        (true, true) => NE,
        (false, false) => SW,
        (false, true) => SE,
    }
}

/// Sub-region of `region` for the given child slot, split at its center.
pub fn child_region(region: &BBox, slot: usize) -> BBox {
    let c = region.center();
    let (xmin, xmax) = if slot == NW || slot == SW { (region.xmin, c.x) } else { (c.x, region.xmax) };
    let (ymin, ymax) = if slot == NW || slot == NE { (c.y, region.ymax) } else { (region.ymin, c.y) };
    BBox { xmin, ymin, xmax, ymax }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointNode {
    pub site: Point,
    pub children: [Option<usize>; 4],
}

/// Quadtree whose every node stores one site and splits the plane at it.
///
/// Shape depends on insertion order; nothing is rebalanced.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PointQuadtree {
    nodes: Vec<PointNode>,
    root: Option<usize>,
}

impl PointQuadtree {
    pub fn build(points: &[Point]) -> Result<Self> {
        let mut tree = PointQuadtree::default();
        for &p in points {
            tree.insert(p)?;
        }
        Ok(tree)
    }

    pub fn insert(&mut self, p: Point) -> Result<()> {
        Point::checked(p.x, p.y)?;
        let new = self.nodes.len();
        let Some(mut cur) = self.root else {
            self.nodes.push(PointNode { site: p, children: [None; 4] });
            self.root = Some(new);
            return Ok(());
        };
        loop {
            let site = self.nodes[cur].site;
            if site.approx_eq(p) {
                return Err(Error::DuplicateSite { x: p.x, y: p.y });
            }
            let slot = quadrant(p, site);
            match self.nodes[cur].children[slot] {
                Some(next) => cur = next,
                None => {
                    self.nodes[cur].children[slot] = Some(new);
                    self.nodes.push(PointNode { site: p, children: [None; 4] });
                    return Ok(());
                }
            }
        }
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn node(&self, id: usize) -> &PointNode {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Sites in preorder (node, then NW, NE, SW, SE).
    pub fn collect(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack: Vec<usize> = self.root.into_iter().collect();
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            out.push(node.site);
            stack.extend(node.children.iter().rev().flatten());
        }
        out
    }

    /// Number of nodes on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        let mut best = 0;
        let mut stack: Vec<(usize, usize)> = self.root.map(|r| (r, 1)).into_iter().collect();
        while let Some((id, d)) = stack.pop() {
            best = best.max(d);
            stack.extend(self.nodes[id].children.iter().flatten().map(|&c| (c, d + 1)));
        }
        best
    }

    /// Root-to-node path of sites visited while searching for `p`.
    pub fn search_path(&self, p: Point) -> Vec<usize> {
        let mut path = Vec::new();
        let mut cur = self.root;
        while let Some(id) = cur {
            path.push(id);
            let site = self.nodes[id].site;
            if site.approx_eq(p) {
                break;
            }
            cur = self.nodes[id].children[quadrant(p, site)];
        }
        path
    }

    fn node_json(&self, id: Option<usize>, out: &mut String) {
        let Some(id) = id else {
            out.push_str("null");
            return;
        };
        let node = &self.nodes[id];
        out.push_str("{\"site\":");
        out.push_str(&json::point(node.site));
        for (key, child) in CHILD_KEYS.iter().zip(node.children) {
            out.push_str(",\"");
            out.push_str(key);
            out.push_str("\":");
            self.node_json(child, out);
        }
        out.push('}');
    }

    pub fn to_array(&self) -> String {
        let mut out = String::from("{\"kind\":\"point\",\"root\":");
        self.node_json(self.root, &mut out);
        out.push('}');
        out
    }

    fn parse_node(&mut self, v: &Value) -> Result<Option<usize>> {
        if v.is_null() {
            return Ok(None);
        }
        let site = json::as_point(json::field(v, "site")?)?;
        let id = self.nodes.len();
        self.nodes.push(PointNode { site, children: [None; 4] });
        for (slot, key) in CHILD_KEYS.iter().enumerate() {
            let child = self.parse_node(json::field(v, key)?)?;
            self.nodes[id].children[slot] = child;
        }
        Ok(Some(id))
    }

    /// Structural equality with coordinates compared up to `tol`.
    pub fn same_structure(&self, other: &PointQuadtree, tol: f64) -> bool {
        fn rec(a: &PointQuadtree, ai: Option<usize>, b: &PointQuadtree, bi: Option<usize>, tol: f64) -> bool {
            match (ai, bi) {
                (None, None) => true,
                (Some(x), Some(y)) => {
                    let (na, nb) = (&a.nodes[x], &b.nodes[y]);
                    close(na.site, nb.site, tol)
                        && (0..4).all(|s| rec(a, na.children[s], b, nb.children[s], tol))
                }
                _ => false,
            }
        }
        rec(self, self.root, other, other.root, tol)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PrKind {
    Leaf(Vec<Point>),
    Internal([usize; 4]),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrNode {
    pub region: BBox,
    pub depth: u32,
    pub kind: PrKind,
}

/// Point-region quadtree: fixed regions split at their centers, points only
/// in leaves, at most `capacity` points per leaf above [`MAX_DEPTH`].
#[derive(Debug, Clone, PartialEq)]
pub struct PrQuadtree {
    nodes: Vec<PrNode>,
    capacity: usize,
    overfull: bool,
}

impl PrQuadtree {
    /// Builds the tree. Without an explicit region the root is the tight
    /// bounding square of the points grown by 5% on every side.
    pub fn build(points: &[Point], region: Option<BBox>, capacity: usize) -> Result<Self> {
        if capacity == 0 {
            return Err(Error::ZeroCapacity);
        }
        for p in points {
            Point::checked(p.x, p.y)?;
        }
        let region = match region {
            Some(r) => {
                if let Some(p) = points.iter().find(|p| !r.contains(**p)) {
                    return Err(Error::PointOutsideRegion { x: p.x, y: p.y });
                }
                r
            }
            None => default_region(points),
        };
        let mut tree = PrQuadtree {
            nodes: vec![PrNode { region, depth: 0, kind: PrKind::Leaf(Vec::new()) }],
            capacity,
            overfull: false,
        };
        for &p in points {
            tree.insert(p);
        }
        Ok(tree)
    }

    fn leaf_for(&self, p: Point) -> usize {
        let mut cur = 0;
        while let PrKind::Internal(children) = &self.nodes[cur].kind {
            cur = children[quadrant(p, self.nodes[cur].region.center())];
        }
        cur
    }

    fn insert(&mut self, p: Point) {
        let leaf = self.leaf_for(p);
        let PrKind::Leaf(pts) = &mut self.nodes[leaf].kind else { unreachable!() };
        pts.push(p);
        let mut pending = vec![leaf];
        while let Some(id) = pending.pop() {
            let node = &self.nodes[id];
            let PrKind::Leaf(pts) = &node.kind else { continue };
            if pts.len() <= self.capacity {
                continue;
            }
            if node.depth >= MAX_DEPTH {
                self.overfull = true;
                continue;
            }
            let (region, depth) = (node.region, node.depth);
            let center = region.center();
            let mut buckets: [Vec<Point>; 4] = Default::default();
            for &q in pts {
                buckets[quadrant(q, center)].push(q);
            }
            let first = self.nodes.len();
            for (slot, bucket) in buckets.into_iter().enumerate() {
                self.nodes.push(PrNode {
                    region: child_region(&region, slot),
                    depth: depth + 1,
                    kind: PrKind::Leaf(bucket),
                });
                pending.push(first + slot);
            }
            self.nodes[id].kind = PrKind::Internal([first, first + 1, first + 2, first + 3]);
        }
    }

    pub fn root(&self) -> &PrNode {
        &self.nodes[0]
    }

    pub fn node(&self, id: usize) -> &PrNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[PrNode] {
        &self.nodes
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// True when some leaf at [`MAX_DEPTH`] had to keep more than `capacity` points.
    pub fn has_overfull_leaf(&self) -> bool {
        self.overfull
    }

    /// Leaf ids in preorder.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![0usize];
        while let Some(id) = stack.pop() {
            match &self.nodes[id].kind {
                PrKind::Leaf(_) => out.push(id),
                PrKind::Internal(ch) => stack.extend(ch.iter().rev()),
            }
        }
        out
    }

    /// Leaf whose region receives `p` under the tie-break rule.
    pub fn locate_leaf(&self, p: Point) -> usize {
        self.leaf_for(p)
    }

    pub fn collect(&self) -> Vec<Point> {
        self.leaves()
            .into_iter()
            .flat_map(|id| match &self.nodes[id].kind {
                PrKind::Leaf(pts) => pts.clone(),
                PrKind::Internal(_) => unreachable!(),
            })
            .collect()
    }

    fn node_json(&self, id: usize, out: &mut String) {
        let node = &self.nodes[id];
        let r = node.region;
        out.push_str("{\"region\":");
        out.push_str(&json::list([r.xmin, r.ymin, r.xmax, r.ymax].map(json::num)));
        match &node.kind {
            PrKind::Leaf(pts) => {
                out.push_str(",\"points\":");
                out.push_str(&json::points(pts));
            }
            PrKind::Internal(ch) => {
                out.push_str(",\"children\":[");
                for (k, &c) in ch.iter().enumerate() {
                    if k > 0 {
                        out.push(',');
                    }
                    self.node_json(c, out);
                }
                out.push(']');
            }
        }
        out.push('}');
    }

    pub fn to_array(&self) -> String {
        let mut out = String::from("{\"kind\":\"pr\",\"root\":");
        self.node_json(0, &mut out);
        out.push('}');
        out
    }

    fn parse_node(&mut self, v: &Value, depth: u32) -> Result<usize> {
        let r = json::as_array(json::field(v, "region")?)?;
        let region = match r.as_slice() {
            [a, b, c, d] => BBox::new(json::as_f64(a)?, json::as_f64(b)?, json::as_f64(c)?, json::as_f64(d)?)?,
            _ => return Err(json::malformed("region needs four numbers")),
        };
        let id = self.nodes.len();
        self.nodes.push(PrNode { region, depth, kind: PrKind::Leaf(Vec::new()) });
        if let Some(pts) = v.get("points") {
            let pts = json::as_points(pts)?;
            self.capacity = self.capacity.max(pts.len());
            self.nodes[id].kind = PrKind::Leaf(pts);
        } else {
            let ch = json::as_array(json::field(v, "children")?)?;
            if ch.len() != 4 {
                return Err(json::malformed("internal node needs four children"));
            }
            let mut ids = [0; 4];
            for (slot, c) in ch.iter().enumerate() {
                ids[slot] = self.parse_node(c, depth + 1)?;
            }
            self.nodes[id].kind = PrKind::Internal(ids);
        }
        Ok(id)
    }

    /// Structural equality (regions, splits, leaf contents) up to `tol`.
    /// Capacity is not part of the structure.
    pub fn same_structure(&self, other: &PrQuadtree, tol: f64) -> bool {
        fn rec(a: &PrQuadtree, x: usize, b: &PrQuadtree, y: usize, tol: f64) -> bool {
            let (na, nb) = (&a.nodes[x], &b.nodes[y]);
            let (ra, rb) = (na.region, nb.region);
            let regions_match = close(Point::new(ra.xmin, ra.ymin), Point::new(rb.xmin, rb.ymin), tol)
                && close(Point::new(ra.xmax, ra.ymax), Point::new(rb.xmax, rb.ymax), tol);
            regions_match
                && match (&na.kind, &nb.kind) {
                    (PrKind::Leaf(p), PrKind::Leaf(q)) => {
                        p.len() == q.len() && p.iter().zip(q).all(|(&u, &v)| close(u, v, tol))
                    }
                    (PrKind::Internal(c), PrKind::Internal(d)) => (0..4).all(|s| rec(a, c[s], b, d[s], tol)),
                    _ => false,
                }
        }
        rec(self, 0, other, 0, tol)
    }
}

fn close(a: Point, b: Point, tol: f64) -> bool {
    let scale = 1.0f64.max(a.x.abs()).max(a.y.abs());
    (a.x - b.x).abs() <= tol * scale && (a.y - b.y).abs() <= tol * scale
}

pub(crate) fn default_region(points: &[Point]) -> BBox {
    let Some((lo, hi)) = BBox::bounding(points.iter().copied()) else {
        return BBox { xmin: 0.0, ymin: 0.0, xmax: 1.0, ymax: 1.0 };
    };
    let mut side = (hi.x - lo.x).max(hi.y - lo.y);
    if side <= 0.0 {
        side = 1.0;
    }
    let half = 0.55 * side;
    let c = lo.midpoint(hi);
    BBox { xmin: c.x - half, ymin: c.y - half, xmax: c.x + half, ymax: c.y + half }
}

/// Either quadtree variant, as read back from or written to the array format.
#[derive(Debug, Clone, PartialEq)]
pub enum Quadtree {
    Point(PointQuadtree),
    Pr(PrQuadtree),
}

impl Quadtree {
    pub fn to_array(&self) -> String {
        match self {
            Quadtree::Point(t) => t.to_array(),
            Quadtree::Pr(t) => t.to_array(),
        }
    }

    /// Parses the array format. A parsed PR tree reports the largest leaf
    /// occupancy as its capacity, since the format does not carry one.
    pub fn parse_array(text: &str) -> Result<Quadtree> {
        let v = json::parse_value(text)?;
        let obj = v.as_object().ok_or_else(|| json::malformed("expected object"))?;
        if obj.len() != 2 {
            return Err(json::malformed("expected exactly keys `kind` and `root`"));
        }
        let root = json::field(&v, "root")?;
        match json::field(&v, "kind")?.as_str() {
            Some("point") => {
                let mut t = PointQuadtree::default();
                t.root = t.parse_node(root)?;
                Ok(Quadtree::Point(t))
            }
            Some("pr") => {
                let mut t = PrQuadtree { nodes: Vec::new(), capacity: 1, overfull: false };
                t.parse_node(root, 0)?;
                Ok(Quadtree::Pr(t))
            }
            _ => Err(json::malformed("kind must be \"point\" or \"pr\"")),
        }
    }

    pub fn same_structure(&self, other: &Quadtree, tol: f64) -> bool {
        match (self, other) {
            (Quadtree::Point(a), Quadtree::Point(b)) => a.same_structure(b, tol),
            (Quadtree::Pr(a), Quadtree::Pr(b)) => a.same_structure(b, tol),
            _ => false,
        }
    }
}
