//! Covers: ordered sets of sensitive nodes laid over an object.
//!
//! The engine never looks at an object's geometry, only at its cover. Node
//! order matters: the first node containing the pointer decides the outcome.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{
    distance, inside_convex_polygon, is_convex, point_segment_distance, Point2, Rect,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoverError {
    #[error("a cover needs at least one node")]
    Empty,
    #[error("node {0}: polygon vertices are not convex")]
    NotConvex(usize),
    #[error("node id {id} out of range for a cover of {len} nodes")]
    NodeOutOfRange { id: usize, len: usize },
    #[error("rectangle must be positive, got {w} x {h}")]
    DegenerateRect { w: f64, h: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NodeShape {
    Circle,
    Polygon,
    Strip,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Behaviour {
    /// Blocks the point for every object, including the ones below.
    Nonmoveable,
    Moveable,
    /// Skips the rest of this cover and lets deeper objects be caught.
    Transparent,
    /// Recognised by the engine but never dragged.
    Frozen,
}

/// Abstract cursor tokens; hosts map them to real cursors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CursorHint {
    Default,
    Hand,
    SizeAll,
    SizeNS,
    SizeWE,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum NodeGeometry {
    Circle { center: Point2, radius: f64 },
    /// A capsule: every point within `radius` of the segment `p0-p1`.
    Strip { p0: Point2, p1: Point2, radius: f64 },
    Polygon { vertices: Vec<Point2> },
}

/// Default radius of circle and strip nodes.
pub const DEFAULT_NODE_RADIUS: f64 = 3.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverNode {
    pub id: usize,
    pub geometry: NodeGeometry,
    pub behaviour: Behaviour,
    pub cursor: CursorHint,
    /// Visualisation hint: fill the node when covers are shown.
    pub clearance: bool,
}

impl CoverNode {
    #[must_use]
    pub fn circle(center: Point2, radius: f64) -> Self {
        Self {
            id: 0,
            geometry: NodeGeometry::Circle { center, radius },
            behaviour: Behaviour::Moveable,
            cursor: CursorHint::Hand,
            clearance: true,
        }
    }

    #[must_use]
    pub fn strip(p0: Point2, p1: Point2, radius: f64) -> Self {
        Self {
            id: 0,
            geometry: NodeGeometry::Strip { p0, p1, radius },
            behaviour: Behaviour::Moveable,
            cursor: CursorHint::Hand,
            clearance: true,
        }
    }

    /// A polygon node. One vertex degrades to a default-radius circle and two
    /// vertices to a default-radius strip; both keep the polygon defaults.
    #[must_use]
    pub fn polygon(vertices: Vec<Point2>) -> Self {
        let geometry = match vertices.len() {
            0 => NodeGeometry::Circle {
                center: Point2::default(),
                radius: 0.0,
            },
            1 => NodeGeometry::Circle {
                center: vertices[0],
                radius: DEFAULT_NODE_RADIUS,
            },
            2 => NodeGeometry::Strip {
                p0: vertices[0],
                p1: vertices[1],
                radius: DEFAULT_NODE_RADIUS,
            },
            _ => NodeGeometry::Polygon { vertices },
        };
        Self {
            id: 0,
            geometry,
            behaviour: Behaviour::Moveable,
            cursor: CursorHint::SizeAll,
            clearance: false,
        }
    }

    /// A node that never contains any point. Keeps node numbering stable
    /// when a handle is switched off.
    #[must_use]
    pub fn inert(at: Point2) -> Self {
        Self::circle(at, -1.0).with_cursor(CursorHint::Default)
    }

    #[must_use]
    pub fn rect(r: Rect) -> Self {
        Self::polygon(r.corners().to_vec())
    }

    #[must_use]
    pub fn with_behaviour(mut self, b: Behaviour) -> Self {
        self.behaviour = b;
        if b == Behaviour::Transparent {
            self.cursor = CursorHint::Default;
        }
        self
    }

    #[must_use]
    pub fn with_cursor(mut self, c: CursorHint) -> Self {
        self.cursor = c;
        self
    }

    #[must_use]
    pub fn with_clearance(mut self, clearance: bool) -> Self {
        self.clearance = clearance;
        self
    }

    #[must_use]
    pub fn shape(&self) -> NodeShape {
        match self.geometry {
            NodeGeometry::Circle { .. } => NodeShape::Circle,
            NodeGeometry::Strip { .. } => NodeShape::Strip,
            NodeGeometry::Polygon { .. } => NodeShape::Polygon,
        }
    }

    #[must_use]
    pub fn contains(&self, p: Point2) -> bool {
        node_contains(self, p)
    }

    #[must_use]
    pub fn translated(&self, dx: f64, dy: f64) -> Self {
        let mut n = self.clone();
        match &mut n.geometry {
            NodeGeometry::Circle { center, .. } => *center = center.offset(dx, dy),
            NodeGeometry::Strip { p0, p1, .. } => {
                *p0 = p0.offset(dx, dy);
                *p1 = p1.offset(dx, dy);
            }
            NodeGeometry::Polygon { vertices } => {
                for v in vertices.iter_mut() {
                    *v = v.offset(dx, dy);
                }
            }
        }
        n
    }
}

/// Boundary-inclusive containment.
#[must_use]
pub fn node_contains(node: &CoverNode, p: Point2) -> bool {
    match &node.geometry {
        NodeGeometry::Circle { center, radius } => distance(*center, p) <= *radius,
        NodeGeometry::Strip { p0, p1, radius } => point_segment_distance(p, *p0, *p1).0 <= *radius,
        NodeGeometry::Polygon { vertices } => inside_convex_polygon(p, vertices).unwrap_or(false),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cover {
    nodes: Vec<CoverNode>,
}

impl Cover {
    /// Builds a validated cover and renumbers node ids to match their index.
    pub fn new(nodes: Vec<CoverNode>) -> Result<Self, CoverError> {
        if nodes.is_empty() {
            return Err(CoverError::Empty);
        }
        for (i, n) in nodes.iter().enumerate() {
            if let NodeGeometry::Polygon { vertices } = &n.geometry {
                if !is_convex(vertices) {
                    return Err(CoverError::NotConvex(i));
                }
            }
        }
        Ok(Self::assemble(nodes))
    }

    /// Unchecked constructor for covers built by shapes, whose polygons are
    /// convex by construction.
    pub(crate) fn assemble(mut nodes: Vec<CoverNode>) -> Self {
        debug_assert!(!nodes.is_empty(), "empty cover");
        for (i, n) in nodes.iter_mut().enumerate() {
            n.id = i;
        }
        Self { nodes }
    }

    #[must_use]
    pub fn nodes(&self) -> &[CoverNode] {
        &self.nodes
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    #[must_use]
    pub fn node(&self, id: usize) -> Option<&CoverNode> {
        self.nodes.get(id)
    }

    #[must_use]
    pub fn last_id(&self) -> usize {
        self.nodes.len() - 1
    }

    #[must_use]
    pub fn hit(&self, p: Point2) -> CoverHit {
        cover_hit(self, p)
    }

    /// Sets every node's behaviour, leaving Transparent nodes alone.
    pub(crate) fn freeze(&mut self) {
        for n in &mut self.nodes {
            if n.behaviour != Behaviour::Transparent {
                n.behaviour = Behaviour::Frozen;
            }
        }
    }

    /// Drawable outlines, in node order.
    #[must_use]
    pub fn primitives(&self) -> Vec<CoverPrimitive> {
        self.nodes
            .iter()
            .map(|n| CoverPrimitive {
                node: n.id,
                geometry: n.geometry.clone(),
                behaviour: n.behaviour,
                filled: n.clearance,
            })
            .collect()
    }
}

/// One cover node prepared for drawing.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverPrimitive {
    pub node: usize,
    pub geometry: NodeGeometry,
    pub behaviour: Behaviour,
    pub filled: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverHit {
    Miss,
    Blocked,
    TransparentFallthrough,
    Frozen {
        node: usize,
    },
    Grab {
        node: usize,
        shape: NodeShape,
        cursor: CursorHint,
    },
}

/// The first node containing `p` decides.
#[must_use]
pub fn cover_hit(cover: &Cover, p: Point2) -> CoverHit {
    for n in &cover.nodes {
        if !n.contains(p) {
            continue;
        }
        return match n.behaviour {
            Behaviour::Nonmoveable => CoverHit::Blocked,
            Behaviour::Transparent => CoverHit::TransparentFallthrough,
            Behaviour::Frozen => CoverHit::Frozen { node: n.id },
            Behaviour::Moveable => CoverHit::Grab {
                node: n.id,
                shape: n.shape(),
                cursor: n.cursor,
            },
        };
    }
    CoverHit::Miss
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeSelector {
    Id(usize),
    Shape(NodeShape),
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NodeAttrs {
    pub behaviour: Option<Behaviour>,
    pub cursor: Option<CursorHint>,
    pub clearance: Option<bool>,
}

/// Updates the attributes of the selected nodes; geometry and order stay.
pub fn cover_edit(cover: &Cover, selector: NodeSelector, attrs: NodeAttrs) -> Result<Cover, CoverError> {
    if let NodeSelector::Id(id) = selector {
        if id >= cover.len() {
            return Err(CoverError::NodeOutOfRange { id, len: cover.len() });
        }
    }
    let mut out = cover.clone();
    for n in &mut out.nodes {
        let selected = match selector {
            NodeSelector::Id(id) => n.id == id,
            NodeSelector::Shape(s) => n.shape() == s,
            NodeSelector::All => true,
        };
        if !selected {
            continue;
        }
        if let Some(b) = attrs.behaviour {
            n.behaviour = b;
        }
        if let Some(c) = attrs.cursor {
            n.cursor = c;
        }
        if let Some(c) = attrs.clearance {
            n.clearance = c;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Resizing {
    None,
    NS,
    WE,
    Any,
}

pub const DEFAULT_CORNER_RADIUS: f64 = 6.0;
pub const DEFAULT_HALF_STRIP: f64 = 3.0;

/// Node order for `Resizing::Any`: corners LT, RT, RB, LB; borders left,
/// right, top, bottom; then the whole area. `NS` has top and bottom borders,
/// `WE` has left and right borders.
pub fn standard_rect_cover(
    rect: Rect,
    resizing: Resizing,
    corner_radius: f64,
    half_strip: f64,
) -> Result<Cover, CoverError> {
    if !(rect.w > 0.0 && rect.h > 0.0) {
        return Err(CoverError::DegenerateRect { w: rect.w, h: rect.h });
    }
    Ok(rect_cover_unchecked(rect, resizing, corner_radius, half_strip))
}

pub(crate) fn rect_cover_unchecked(rect: Rect, resizing: Resizing, corner_radius: f64, half_strip: f64) -> Cover {
    let mut nodes = Vec::with_capacity(9);
    let hs = half_strip;
    let left = CoverNode::rect(Rect::new(rect.left() - hs, rect.top(), 2.0 * hs, rect.h))
        .with_cursor(CursorHint::SizeWE);
    let right = CoverNode::rect(Rect::new(rect.right() - hs, rect.top(), 2.0 * hs, rect.h))
        .with_cursor(CursorHint::SizeWE);
    let top = CoverNode::rect(Rect::new(rect.left(), rect.top() - hs, rect.w, 2.0 * hs))
        .with_cursor(CursorHint::SizeNS);
    let bottom = CoverNode::rect(Rect::new(rect.left(), rect.bottom() - hs, rect.w, 2.0 * hs))
        .with_cursor(CursorHint::SizeNS);
    match resizing {
        Resizing::None => {}
        Resizing::NS => nodes.extend([top, bottom]),
        Resizing::WE => nodes.extend([left, right]),
        Resizing::Any => {
            nodes.extend(rect.corners().map(|c| CoverNode::circle(c, corner_radius)));
            nodes.extend([left, right, top, bottom]);
        }
    }
    nodes.push(CoverNode::rect(rect));
    Cover::assemble(nodes)
}
