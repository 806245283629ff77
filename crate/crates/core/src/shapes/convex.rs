//! Polygon reshaped by its vertices but never allowed to lose convexity.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverNode, CursorHint};
use crate::engine::{MouseButton, MouseLink};
use crate::geometry::{distance, is_convex, opposite_side, same_side, Point2};
use crate::object::{IdGen, Meta, Movable};
use crate::scene::svg::Canvas;

use super::ShapeError;

pub const CONVEX_VERTEX_RADIUS: f64 = 4.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexPoly {
    pub meta: Meta,
    pub vertices: Vec<Point2>,
    pub min_side: f64,
}

impl ConvexPoly {
    pub fn new(ids: &mut IdGen, vertices: Vec<Point2>, min_side: f64) -> Result<Self, ShapeError> {
        if vertices.len() < 4 {
            return Err(ShapeError::Invalid("a convex polygon needs at least 4 vertices".into()));
        }
        if !is_convex(&vertices) {
            return Err(ShapeError::Invalid("vertices do not form a convex polygon".into()));
        }
        Ok(Self { meta: ids.meta(), vertices, min_side })
    }

    /// Moves vertex `i` by (dx, dy) if the polygon stays convex and both
    /// neighbours stay farther than the minimum side.
    pub fn convex_vertex_move(&mut self, i: usize, dx: f64, dy: f64) -> bool {
        let n = self.vertices.len();
        if i >= n {
            return false;
        }
        let pts = &self.vertices;
        let p_new = pts[i].offset(dx, dy);
        let next = (i + 1) % n;
        let next2 = (i + 2) % n;
        let prev = (i + n - 1) % n;
        let prev2 = (i + n - 2) % n;
        let ok = distance(pts[prev], p_new) > self.min_side
            && distance(pts[next], p_new) > self.min_side
            && opposite_side(pts[prev], pts[next], p_new, pts[next2]).unwrap_or(false)
            && same_side(pts[prev2], pts[prev], p_new, pts[next]).unwrap_or(false)
            && same_side(pts[next2], pts[next], p_new, pts[prev]).unwrap_or(false);
        if ok {
            self.vertices[i] = p_new;
        }
        ok
    }
}

impl Movable for ConvexPoly {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn define_cover(&self) -> Cover {
        let mut nodes: Vec<CoverNode> = self.vertices.iter().map(|p| CoverNode::circle(*p, CONVEX_VERTEX_RADIUS)).collect();
        nodes.push(CoverNode::polygon(self.vertices.clone()).with_cursor(CursorHint::SizeAll));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        for p in &mut self.vertices {
            *p = p.offset(dx, dy);
        }
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, _pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        if button != MouseButton::Left {
            return false;
        }
        if node < self.vertices.len() {
            self.convex_vertex_move(node, dx, dy)
        } else {
            self.translate(dx, dy);
            true
        }
    }

    fn basic_points(&self) -> Vec<Point2> {
        self.vertices.clone()
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.polygon(&self.vertices, &self.meta.color);
    }
}

crate::leaf_assembly!(ConvexPoly);
