//! Regular polygons with three resizing variants and optional restriction of
//! forward movement to one axis.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverNode, CursorHint, NodeShape};
use crate::engine::{MouseButton, MouseLink};
use crate::geometry::{distance, line_angle, normalize_angle, regular_polygon_vertices, round_px, Point2};
use crate::object::{GestureStart, IdGen, Meta, Movable, Released};
use crate::scene::svg::Canvas;

use super::{scaling_for, single_compensation, BorderScalable, GestureAux, Rotatable, ShapeError, DISAPPEARANCE_SIZE, SMALL_NODE_RADIUS};

/// How the polygon can be resized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum PolyZoom {
    /// Single polygonal node; movable only.
    #[default]
    NonResizable,
    /// Small circles on the vertices set the radius directly.
    ZoomByVertices,
    /// Strips along the sides scale the radius by the grab ratio.
    ZoomByBorder,
}

/// Allowed forward movement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Movement {
    #[default]
    Any,
    Horizontal,
    Vertical,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegularPoly {
    pub meta: Meta,
    pub center: Point2,
    pub radius: f64,
    pub n: usize,
    pub angle: f64,
    pub zoom: PolyZoom,
    pub movement: Movement,
    pub min_r: f64,
    /// Vanishes when released with a radius below the disappearance size.
    pub disappear: bool,
    #[serde(skip)]
    aux: Option<GestureAux>,
}

impl RegularPoly {
    pub fn new(ids: &mut IdGen, center: Point2, radius: f64, n: usize, angle: f64, zoom: PolyZoom) -> Result<Self, ShapeError> {
        regular_polygon_vertices(center, radius, n, angle).map_err(|e| ShapeError::Invalid(e.to_string()))?;
        Ok(Self {
            meta: ids.meta(),
            center,
            radius,
            n,
            angle,
            zoom,
            movement: Movement::Any,
            min_r: 10.0,
            disappear: false,
            aux: None,
        })
    }

    /// Border-zoomed polygon that may be squeezed out of existence.
    pub fn disappearing(ids: &mut IdGen, center: Point2, radius: f64, n: usize, angle: f64) -> Result<Self, ShapeError> {
        let mut p = Self::new(ids, center, radius, n, angle, PolyZoom::ZoomByBorder)?;
        p.disappear = true;
        p.min_r = 1.0;
        Ok(p)
    }

    #[must_use]
    pub fn vertices(&self) -> Vec<Point2> {
        regular_polygon_vertices(self.center, self.radius, self.n, self.angle).unwrap_or_default()
    }

    #[must_use]
    pub fn disappearance_check(&self) -> bool {
        self.disappear && self.radius < DISAPPEARANCE_SIZE
    }

    fn proposed_radius(&mut self, r: f64) -> bool {
        let ok = if self.disappear { r > self.min_r } else { r >= self.min_r };
        if ok {
            self.radius = round_px(r);
        }
        ok
    }
}

impl Rotatable for RegularPoly {
    fn rotation_center(&self) -> Point2 {
        self.center
    }

    fn begin_rotation(&self, p: Point2) -> Result<GestureAux, ShapeError> {
        Ok(single_compensation(self.center, self.angle, p))
    }

    fn rotation_update(&mut self, aux: &GestureAux, p: Point2) {
        self.angle = normalize_angle(line_angle(self.center, p) - aux.compensation);
    }
}

impl BorderScalable for RegularPoly {
    fn scaling_center(&self) -> Point2 {
        self.center
    }

    fn begin_border_scaling(&self, p: Point2) -> Result<GestureAux, ShapeError> {
        scaling_for(self.center, self.radius, p)
    }

    fn scale_update(&mut self, aux: &GestureAux, p: Point2) -> bool {
        self.proposed_radius(distance(self.center, p) * aux.scaling)
    }
}

impl Movable for RegularPoly {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn define_cover(&self) -> Cover {
        let pts = self.vertices();
        let n = pts.len();
        let mut nodes = match self.zoom {
            PolyZoom::NonResizable => Vec::new(),
            PolyZoom::ZoomByVertices => pts.iter().map(|p| CoverNode::circle(*p, SMALL_NODE_RADIUS)).collect(),
            PolyZoom::ZoomByBorder => (0..n).map(|i| CoverNode::strip(pts[i], pts[(i + 1) % n], SMALL_NODE_RADIUS)).collect(),
        };
        let cursor = match self.movement {
            Movement::Any => CursorHint::SizeAll,
            Movement::Horizontal => CursorHint::SizeWE,
            Movement::Vertical => CursorHint::SizeNS,
        };
        nodes.push(CoverNode::polygon(pts).with_cursor(cursor));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        match self.movement {
            Movement::Any => self.center = self.center.offset(dx, dy),
            Movement::Horizontal => self.center = self.center.offset(dx, 0.0),
            Movement::Vertical => self.center = self.center.offset(0.0, dy),
        }
    }

    fn start_gesture(&mut self, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        self.aux = match button {
            MouseButton::Right => self.begin_rotation(pt).ok(),
            MouseButton::Left if self.zoom == PolyZoom::ZoomByBorder && node < self.n => self.begin_border_scaling(pt).ok(),
            MouseButton::Left => None,
        };
        GestureStart::default()
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        match button {
            MouseButton::Left if node >= self.n || self.zoom == PolyZoom::NonResizable => {
                let before = self.center;
                self.translate(dx, dy);
                self.center != before
            }
            MouseButton::Left => match self.zoom {
                PolyZoom::ZoomByVertices => self.proposed_radius(distance(self.center, pt)),
                _ => match self.aux.clone() {
                    Some(aux) => self.scale_update(&aux, pt),
                    None => false,
                },
            },
            MouseButton::Right => match self.aux.clone() {
                Some(aux) => {
                    self.rotation_update(&aux, pt);
                    true
                }
                None => false,
            },
        }
    }

    fn finish_gesture(&mut self, _node: usize, shape: NodeShape) -> Released {
        self.aux = None;
        if shape != NodeShape::Polygon && self.disappearance_check() {
            Released::Remove
        } else {
            Released::Keep
        }
    }

    fn pops_on_click(&self, _node: usize, shape: NodeShape) -> bool {
        shape == NodeShape::Polygon
    }

    fn basic_points(&self) -> Vec<Point2> {
        self.vertices()
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.polygon(&self.vertices(), &self.meta.color);
    }
}

crate::leaf_assembly!(RegularPoly);
