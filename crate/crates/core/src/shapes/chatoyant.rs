//! Polygon of free vertices around a free center: vertices and center move
//! alone, side strips zoom, triangles move, any node rotates.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverNode, CursorHint, NodeShape, DEFAULT_HALF_STRIP};
use crate::engine::{MouseButton, MouseLink};
use crate::geometry::{distance, line_angle, point_at, Point2};
use crate::object::{GestureStart, IdGen, Meta, Movable};
use crate::scene::svg::Canvas;

use super::{apply_multi_rotation, multi_compensation, BorderScalable, GestureAux, Rotatable, ShapeError};

pub const CHATOYANT_POINT_RADIUS: f64 = 6.0;
/// Zooming pauses while the mouse is this close to the center.
pub const CHATOYANT_MIN_ZOOM_DISTANCE: f64 = 25.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChatoyantPoly {
    pub meta: Meta,
    pub center: Point2,
    pub vertices: Vec<Point2>,
    pub colors: Vec<String>,
    #[serde(skip)]
    aux: Option<GestureAux>,
}

impl ChatoyantPoly {
    pub fn new(ids: &mut IdGen, center: Point2, vertices: Vec<Point2>) -> Result<Self, ShapeError> {
        if vertices.len() < 3 {
            return Err(ShapeError::Invalid("a chatoyant polygon needs at least 3 vertices".into()));
        }
        let palette = ["#e04040", "#40a040", "#4060e0", "#e0c020", "#a040c0", "#20b0b0"];
        let colors = (0..vertices.len()).map(|i| palette[i % palette.len()].to_string()).collect();
        Ok(Self { meta: ids.meta(), center, vertices, colors, aux: None })
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    #[must_use]
    pub fn aux(&self) -> Option<&GestureAux> {
        self.aux.as_ref()
    }
}

impl Rotatable for ChatoyantPoly {
    fn rotation_center(&self) -> Point2 {
        self.center
    }

    fn begin_rotation(&self, p: Point2) -> Result<GestureAux, ShapeError> {
        Ok(multi_compensation(self.center, &self.vertices, p))
    }

    fn rotation_update(&mut self, aux: &GestureAux, p: Point2) {
        let c = self.center;
        apply_multi_rotation(c, aux, p, &mut self.vertices);
    }
}

impl BorderScalable for ChatoyantPoly {
    fn scaling_center(&self) -> Point2 {
        self.center
    }

    fn begin_border_scaling(&self, p: Point2) -> Result<GestureAux, ShapeError> {
        let d = distance(self.center, p);
        if d == 0.0 {
            return Err(ShapeError::ZeroDistance);
        }
        Ok(GestureAux {
            scalings: self.vertices.iter().map(|v| distance(self.center, *v) / d).collect(),
            angles: self.vertices.iter().map(|v| line_angle(self.center, *v)).collect(),
            ..GestureAux::default()
        })
    }

    fn scale_update(&mut self, aux: &GestureAux, p: Point2) -> bool {
        let d = distance(self.center, p);
        if d <= CHATOYANT_MIN_ZOOM_DISTANCE {
            return false;
        }
        for (j, v) in self.vertices.iter_mut().enumerate() {
            *v = point_at(self.center, aux.angles[j], d * aux.scalings[j]);
        }
        true
    }
}

impl Movable for ChatoyantPoly {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    /// Vertices, center, side strips, then the triangles: 3N + 1 nodes.
    fn define_cover(&self) -> Cover {
        let n = self.n();
        let v = &self.vertices;
        let mut nodes: Vec<CoverNode> = v.iter().map(|p| CoverNode::circle(*p, CHATOYANT_POINT_RADIUS)).collect();
        nodes.push(CoverNode::circle(self.center, CHATOYANT_POINT_RADIUS));
        nodes.extend((0..n).map(|i| CoverNode::strip(v[i], v[(i + 1) % n], DEFAULT_HALF_STRIP)));
        nodes.extend((0..n).map(|i| CoverNode::polygon(vec![v[i], v[(i + 1) % n], self.center]).with_cursor(CursorHint::SizeAll)));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        for p in &mut self.vertices {
            *p = p.offset(dx, dy);
        }
        self.center = self.center.offset(dx, dy);
    }

    fn start_gesture(&mut self, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        let n = self.n();
        self.aux = match button {
            MouseButton::Right => self.begin_rotation(pt).ok(),
            MouseButton::Left if node > n && node <= 2 * n => self.begin_border_scaling(pt).ok(),
            MouseButton::Left => None,
        };
        GestureStart::default()
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        let n = self.n();
        match button {
            MouseButton::Left if node < n => {
                self.vertices[node] = self.vertices[node].offset(dx, dy);
                true
            }
            MouseButton::Left if node == n => {
                self.center = self.center.offset(dx, dy);
                true
            }
            MouseButton::Left if node > 2 * n => {
                self.translate(dx, dy);
                true
            }
            MouseButton::Left => match self.aux.clone() {
                Some(aux) => self.scale_update(&aux, pt),
                None => false,
            },
            MouseButton::Right => match self.aux.clone() {
                Some(aux) if aux.radii.len() == n => {
                    self.rotation_update(&aux, pt);
                    true
                }
                _ => false,
            },
        }
    }

    fn pops_on_click(&self, _node: usize, shape: NodeShape) -> bool {
        shape == NodeShape::Polygon
    }

    fn basic_points(&self) -> Vec<Point2> {
        let mut pts = self.vertices.clone();
        pts.push(self.center);
        pts
    }

    fn draw(&self, canvas: &mut Canvas) {
        let n = self.n();
        for i in 0..n {
            canvas.polygon(&[self.vertices[i], self.vertices[(i + 1) % n], self.center], &self.colors[i]);
        }
    }
}

crate::leaf_assembly!(ChatoyantPoly);
