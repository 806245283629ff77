//! Straight line movable by its body, resizable by its ends and rotatable
//! around its middle.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverNode, CursorHint, DEFAULT_NODE_RADIUS};
use crate::engine::{MouseButton, MouseLink};
use crate::geometry::{distance, line_angle, point_at, Point2};
use crate::object::{GestureStart, IdGen, Meta, Movable};
use crate::scene::svg::Canvas;

use super::{apply_multi_rotation, multi_compensation, GestureAux, Rotatable, ShapeError};

pub const LINE_MIN_LEN: f64 = 20.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineShape {
    pub meta: Meta,
    pub pt_a: Point2,
    pub pt_b: Point2,
    #[serde(skip)]
    aux: GestureAux,
}

impl LineShape {
    /// A line shorter than the minimum is extended along its own angle.
    pub fn new(ids: &mut IdGen, pt_a: Point2, pt_b: Point2) -> Self {
        let pt_b = if distance(pt_a, pt_b) >= LINE_MIN_LEN {
            pt_b
        } else {
            point_at(pt_a, line_angle(pt_a, pt_b), LINE_MIN_LEN)
        };
        Self { meta: ids.meta(), pt_a, pt_b, aux: GestureAux::default() }
    }

    #[must_use]
    pub fn length(&self) -> f64 {
        distance(self.pt_a, self.pt_b)
    }
}

impl Rotatable for LineShape {
    fn rotation_center(&self) -> Point2 {
        self.pt_a.midpoint(self.pt_b)
    }

    fn begin_rotation(&self, p: Point2) -> Result<GestureAux, ShapeError> {
        Ok(multi_compensation(self.rotation_center(), &[self.pt_a, self.pt_b], p))
    }

    fn rotation_update(&mut self, aux: &GestureAux, p: Point2) {
        let c = self.rotation_center();
        let mut pts = [self.pt_a, self.pt_b];
        apply_multi_rotation(c, aux, p, &mut pts);
        self.pt_a = pts[0];
        self.pt_b = pts[1];
    }
}

impl Movable for LineShape {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn define_cover(&self) -> Cover {
        Cover::assemble(vec![
            CoverNode::circle(self.pt_a, DEFAULT_NODE_RADIUS),
            CoverNode::circle(self.pt_b, DEFAULT_NODE_RADIUS),
            CoverNode::strip(self.pt_a, self.pt_b, DEFAULT_NODE_RADIUS).with_cursor(CursorHint::SizeAll),
        ])
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.pt_a = self.pt_a.offset(dx, dy);
        self.pt_b = self.pt_b.offset(dx, dy);
    }

    fn start_gesture(&mut self, _node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        if button == MouseButton::Right {
            self.aux = self.begin_rotation(pt).unwrap_or_default();
        }
        GestureStart::default()
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        match button {
            MouseButton::Left => match node {
                0 => {
                    let n = self.pt_a.offset(dx, dy);
                    if distance(n, self.pt_b) >= LINE_MIN_LEN {
                        self.pt_a = n;
                        return true;
                    }
                    false
                }
                1 => {
                    let n = self.pt_b.offset(dx, dy);
                    if distance(self.pt_a, n) >= LINE_MIN_LEN {
                        self.pt_b = n;
                        return true;
                    }
                    false
                }
                _ => {
                    self.translate(dx, dy);
                    true
                }
            },
            MouseButton::Right => {
                if self.aux.radii.len() != 2 {
                    return false;
                }
                let aux = self.aux.clone();
                self.rotation_update(&aux, pt);
                true
            }
        }
    }

    fn basic_points(&self) -> Vec<Point2> {
        vec![self.pt_a, self.pt_b]
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.line(self.pt_a, self.pt_b, &self.meta.color, 2.0);
    }
}

crate::leaf_assembly!(LineShape);
