//! Polyline whose points move individually, whose segments move the whole
//! line, and which turns around an externally set anchor.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverNode, DEFAULT_NODE_RADIUS};
use crate::engine::{MouseButton, MouseLink};
use crate::geometry::Point2;
use crate::object::{GestureStart, IdGen, Meta, Movable};
use crate::scene::svg::Canvas;

use super::{apply_multi_rotation, multi_compensation, GestureAux, Rotatable, ShapeError, SMALL_NODE_RADIUS};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegmentedLine {
    pub meta: Meta,
    pub pts: Vec<Point2>,
    /// Rotation center.
    pub anchor: Point2,
    #[serde(skip)]
    aux: GestureAux,
}

impl SegmentedLine {
    pub fn new(ids: &mut IdGen, pts: Vec<Point2>, anchor: Point2) -> Result<Self, ShapeError> {
        if pts.len() < 2 {
            return Err(ShapeError::Invalid("a segmented line needs at least 2 points".into()));
        }
        Ok(Self { meta: ids.meta(), pts, anchor, aux: GestureAux::default() })
    }

    #[must_use]
    pub fn aux(&self) -> &GestureAux {
        &self.aux
    }
}

impl Rotatable for SegmentedLine {
    fn rotation_center(&self) -> Point2 {
        self.anchor
    }

    fn begin_rotation(&self, p: Point2) -> Result<GestureAux, ShapeError> {
        Ok(multi_compensation(self.anchor, &self.pts, p))
    }

    fn rotation_update(&mut self, aux: &GestureAux, p: Point2) {
        let c = self.anchor;
        apply_multi_rotation(c, aux, p, &mut self.pts);
    }
}

impl Movable for SegmentedLine {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn define_cover(&self) -> Cover {
        let mut nodes: Vec<CoverNode> = self.pts.iter().map(|p| CoverNode::circle(*p, SMALL_NODE_RADIUS)).collect();
        nodes.extend(self.pts.windows(2).map(|w| CoverNode::strip(w[0], w[1], DEFAULT_NODE_RADIUS)));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        for p in &mut self.pts {
            *p = p.offset(dx, dy);
        }
        self.anchor = self.anchor.offset(dx, dy);
    }

    fn start_gesture(&mut self, _node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        if button == MouseButton::Right {
            self.aux = self.begin_rotation(pt).unwrap_or_default();
        }
        GestureStart::default()
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        match button {
            MouseButton::Left => {
                if node < self.pts.len() {
                    self.pts[node] = self.pts[node].offset(dx, dy);
                } else {
                    self.translate(dx, dy);
                }
                true
            }
            MouseButton::Right => {
                if self.aux.radii.len() != self.pts.len() {
                    return false;
                }
                let aux = self.aux.clone();
                self.rotation_update(&aux, pt);
                true
            }
        }
    }

    fn pops_on_click(&self, node: usize, _shape: crate::cover::NodeShape) -> bool {
        node >= self.pts.len()
    }

    fn basic_points(&self) -> Vec<Point2> {
        self.pts.clone()
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.polyline(&self.pts, &self.meta.color, 2.0);
    }
}

crate::leaf_assembly!(SegmentedLine);
