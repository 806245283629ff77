//! Catalogue of shape kinds, one per cover and gesture technique.

use std::f64::consts::PI;

use thiserror::Error;

use crate::geometry::{distance, line_angle, normalize_angle, round_px, Point2};

pub mod holes;
pub mod line;
pub mod partition;
pub mod sector;
pub mod nnode;
pub mod chatoyant;
pub mod convex;
pub mod regpoly;
pub mod rotrect;
pub mod label;
pub mod rect;
pub mod sectored;
pub mod segmented;

pub use holes::{plug_fits, FitTolerance, Hole, HoleBoard, HoledPoly, Plug, PlugForm};
pub use line::LineShape;
pub use partition::{PartitionedCircle, PartitionedRect};
pub use sector::{Sector, SectorFlags};
pub use nnode::{NnodeCircle, NnodeRing, NnodeStrip};
pub use chatoyant::ChatoyantPoly;
pub use convex::ConvexPoly;
pub use regpoly::{Movement, PolyZoom, RegularPoly};
pub use rotrect::RotRect;
pub use label::{LabelBox, TextBasis};
pub use rect::{FixedRatioRect, RectRange, RectShape};
pub use sectored::SectoredCircle;
pub use segmented::SegmentedLine;

/// Radius of the small nodes placed along curved borders.
pub const SMALL_NODE_RADIUS: f64 = 5.0;
/// Spacing between neighbouring small nodes on a curved border.
pub const SMALL_NODE_SPACING: f64 = 8.0;
/// Hard minimum side of a standard rectangle.
pub const RECT_MIN_SIZE: f64 = 10.0;
/// Rectangles and polygons below this size vanish on release.
pub const DISAPPEARANCE_SIZE: f64 = 5.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ShapeError {
    #[error("shape is not rotatable")]
    NotRotatable,
    #[error("pointer is on the scaling center")]
    ZeroDistance,
    #[error("invalid shape: {0}")]
    Invalid(String),
}

/// Values captured when a gesture starts and held until release.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GestureAux {
    /// Mouse angle minus object angle, for single-angle rotation.
    pub compensation: f64,
    /// Per-point compensation for multi-point rotation.
    pub compensations: Vec<f64>,
    /// Per-point distance to the rotation or scaling center.
    pub radii: Vec<f64>,
    pub scaling: f64,
    pub scalings: Vec<f64>,
    /// Per-point angle from the scaling center.
    pub angles: Vec<f64>,
    pub start_distance: f64,
    pub mouse_offset: (f64, f64),
    pub limits: (f64, f64),
    pub fractions: Vec<f64>,
    pub narrowest: usize,
    /// Diameter endpoints and the allowed-side witness for sector sides.
    pub half_plane: Option<(Point2, Point2, Point2)>,
}

/// Shapes turned by the right button around a center.
pub trait Rotatable {
    fn rotation_center(&self) -> Point2;
    fn begin_rotation(&self, p: Point2) -> Result<GestureAux, ShapeError>;
    fn rotation_update(&mut self, aux: &GestureAux, p: Point2);
}

/// Shapes zoomed by dragging a border node, keeping the grab ratio.
pub trait BorderScalable {
    fn scaling_center(&self) -> Point2;
    fn begin_border_scaling(&self, p: Point2) -> Result<GestureAux, ShapeError>;
    fn scale_update(&mut self, aux: &GestureAux, p: Point2) -> bool;
}

/// Compensation for a shape with a single angle.
#[must_use]
pub fn single_compensation(center: Point2, angle: f64, p: Point2) -> GestureAux {
    GestureAux {
        compensation: normalize_angle(line_angle(center, p) - angle),
        ..GestureAux::default()
    }
}

/// Per-point radii and compensations around `center`.
#[must_use]
pub fn multi_compensation(center: Point2, points: &[Point2], p: Point2) -> GestureAux {
    let am = line_angle(center, p);
    GestureAux {
        radii: points.iter().map(|q| distance(center, *q)).collect(),
        compensations: points
            .iter()
            .map(|q| normalize_angle(am - line_angle(center, *q)))
            .collect(),
        ..GestureAux::default()
    }
}

/// Places each point at `mouse angle - compensation` on its own radius.
pub fn apply_multi_rotation(center: Point2, aux: &GestureAux, p: Point2, points: &mut [Point2]) {
    let am = line_angle(center, p);
    for (i, q) in points.iter_mut().enumerate() {
        *q = crate::geometry::point_at(center, am - aux.compensations[i], aux.radii[i]);
    }
}

/// Single scaling coefficient `radius / distance(center, p)`.
pub fn scaling_for(center: Point2, radius: f64, p: Point2) -> Result<GestureAux, ShapeError> {
    let d = distance(center, p);
    if d == 0.0 {
        return Err(ShapeError::ZeroDistance);
    }
    Ok(GestureAux {
        scaling: radius / d,
        ..GestureAux::default()
    })
}

/// Small nodes on a full circle of radius `r`.
#[must_use]
pub fn circle_node_count(r: f64) -> usize {
    (round_px(2.0 * PI * r / SMALL_NODE_SPACING) as usize).max(1)
}

/// Small nodes on an arc: never fewer than two.
#[must_use]
pub fn arc_node_count(sweep: f64, r: f64) -> usize {
    ((round_px(sweep.abs() * r / SMALL_NODE_SPACING) as usize) + 1).max(2)
}

/// `n` points evenly spread on a circle, the first at `angle0`.
pub(crate) fn points_on_circle(center: Point2, r: f64, n: usize, angle0: f64) -> Vec<Point2> {
    (0..n)
        .map(|k| crate::geometry::point_at(center, angle0 + 2.0 * PI * k as f64 / n as f64, r))
        .collect()
}

/// `n` points evenly spread on the arc from `start` through `sweep`, both ends included.
pub(crate) fn points_on_arc(center: Point2, r: f64, start: f64, sweep: f64, n: usize) -> Vec<Point2> {
    if n < 2 {
        return vec![crate::geometry::point_at(center, start, r)];
    }
    (0..n)
        .map(|k| crate::geometry::point_at(center, start + sweep * k as f64 / (n - 1) as f64, r))
        .collect()
}
