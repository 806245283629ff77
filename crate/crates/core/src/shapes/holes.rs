//! Boards with holes, plugs to fill them, and a polygon with a round hole.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::cover::{Behaviour, Cover, CoverNode, CursorHint, NodeShape};
use crate::engine::{ClippingLevel, MouseButton, MouseLink};
use crate::geometry::{distance, line_angle, normalize_angle, regular_polygon_vertices, round_px, Point2, Rect};
use crate::object::{GestureStart, IdGen, Meta, Movable, Released};
use crate::scene::svg::Canvas;

use super::{
    circle_node_count, points_on_circle, scaling_for, single_compensation, BorderScalable, GestureAux, Rotatable,
    ShapeError, SMALL_NODE_RADIUS,
};

pub const PLUG_MIN_RADIUS: f64 = 10.0;

/// Outline shared by holes and plugs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlugForm {
    Circle,
    /// Regular polygon with `n` vertices.
    Polygon(usize),
}

impl PlugForm {
    fn outline(self, center: Point2, radius: f64, angle: f64) -> Option<Vec<Point2>> {
        match self {
            PlugForm::Circle => None,
            PlugForm::Polygon(n) => regular_polygon_vertices(center, radius, n, angle).ok(),
        }
    }

    fn validate(self, radius: f64) -> Result<(), ShapeError> {
        if let PlugForm::Polygon(n) = self {
            if n < 3 {
                return Err(ShapeError::Invalid(format!("polygon needs at least 3 vertices, got {n}")));
            }
        }
        if !(radius > 0.0) {
            return Err(ShapeError::Invalid(format!("radius must be positive, got {radius}")));
        }
        Ok(())
    }
}

/// A hole in a board. Holes are never resized.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hole {
    pub form: PlugForm,
    pub center: Point2,
    pub radius: f64,
    #[serde(default)]
    pub angle: f64,
}

impl Hole {
    fn node(&self) -> CoverNode {
        let node = match self.form.outline(self.center, self.radius, self.angle) {
            Some(pts) => CoverNode::polygon(pts),
            None => CoverNode::circle(self.center, self.radius),
        };
        node.with_behaviour(Behaviour::Transparent)
    }
}

/// Maximum mismatch still accepted as a fit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitTolerance {
    pub center: f64,
    pub radius: f64,
    pub angle: f64,
}

impl Default for FitTolerance {
    fn default() -> Self {
        Self { center: 5.0, radius: 4.0, angle: 0.1 }
    }
}

/// Whether `plug` sits in `hole` closely enough. Polygons are compared up to
/// their rotational symmetry.
#[must_use]
pub fn plug_fits(hole: &Hole, plug: &Plug, tol: FitTolerance) -> bool {
    if hole.form != plug.form {
        return false;
    }
    if distance(hole.center, plug.center) > tol.center || (hole.radius - plug.radius).abs() > tol.radius {
        return false;
    }
    match hole.form {
        PlugForm::Circle => true,
        PlugForm::Polygon(n) => {
            let delta = plug.angle - hole.angle;
            (0..n)
                .map(|k| normalize_angle(delta + 2.0 * PI * k as f64 / n as f64).abs())
                .any(|d| d <= tol.angle)
        }
    }
}

/// Rectangular board with holes; objects below show through them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HoleBoard {
    pub meta: Meta,
    pub rect: Rect,
    pub holes: Vec<Hole>,
    /// Smallest gap allowed between two holes and between a hole and the edge.
    pub spacing: f64,
}

impl HoleBoard {
    pub fn new(ids: &mut IdGen, rect: Rect, spacing: f64) -> Result<Self, ShapeError> {
        if !(rect.w > 0.0 && rect.h > 0.0) {
            return Err(ShapeError::Invalid(format!("board must be positive, got {} x {}", rect.w, rect.h)));
        }
        Ok(Self { meta: ids.meta(), rect, holes: Vec::new(), spacing })
    }

    /// Adds a hole if it stays inside the board and keeps the spacing to every
    /// other hole (measured between circumscribed circles).
    pub fn add_hole(&mut self, hole: Hole) -> Result<(), ShapeError> {
        hole.form.validate(hole.radius)?;
        let room = hole.radius + self.spacing;
        let inner = self.rect.inflate(-room, -room, -room, -room);
        if inner.w < 0.0 || inner.h < 0.0 || !inner.contains(hole.center) {
            return Err(ShapeError::Invalid("hole does not fit on the board".into()));
        }
        if self
            .holes
            .iter()
            .any(|h| distance(h.center, hole.center) < h.radius + hole.radius + self.spacing)
        {
            return Err(ShapeError::Invalid("hole is too close to another hole".into()));
        }
        self.holes.push(hole);
        Ok(())
    }

    /// Index of the first hole the plug fits.
    #[must_use]
    pub fn fitting_hole(&self, plug: &Plug, tol: FitTolerance) -> Option<usize> {
        self.holes.iter().position(|h| plug_fits(h, plug, tol))
    }

    /// Removes the hole filled by `plug`; the caller removes the plug.
    pub fn fill(&mut self, plug: &Plug, tol: FitTolerance) -> bool {
        match self.fitting_hole(plug, tol) {
            Some(i) => {
                self.holes.remove(i);
                true
            }
            None => false,
        }
    }
}

impl Movable for HoleBoard {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    /// One transparent node per hole, then the board.
    fn define_cover(&self) -> Cover {
        let mut nodes: Vec<CoverNode> = self.holes.iter().map(Hole::node).collect();
        nodes.push(CoverNode::rect(self.rect).with_cursor(CursorHint::SizeAll));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.rect = self.rect.translate(dx, dy);
        for h in &mut self.holes {
            h.center = h.center.offset(dx, dy);
        }
    }

    fn move_node(&mut self, _node: usize, dx: f64, dy: f64, _pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        if button != MouseButton::Left {
            return false;
        }
        self.translate(dx, dy);
        true
    }

    fn basic_points(&self) -> Vec<Point2> {
        let mut pts = vec![Point2::new(self.rect.x, self.rect.y), Point2::new(self.rect.right(), self.rect.bottom())];
        pts.extend(self.holes.iter().map(|h| h.center));
        pts
    }

    fn bounds(&self) -> Rect {
        self.rect
    }

    fn draw(&self, canvas: &mut Canvas) {
        let mut d = format!(
            "M {} {} H {} V {} H {} Z",
            self.rect.x,
            self.rect.y,
            self.rect.right(),
            self.rect.bottom(),
            self.rect.x
        );
        for h in &self.holes {
            match h.form.outline(h.center, h.radius, h.angle) {
                Some(pts) => {
                    d.push_str(&format!(" M {} {}", pts[0].x, pts[0].y));
                    for p in &pts[1..] {
                        d.push_str(&format!(" L {} {}", p.x, p.y));
                    }
                    d.push_str(" Z");
                }
                None => d.push_str(&format!(
                    " M {} {} a {r} {r} 0 1 0 {} 0 a {r} {r} 0 1 0 {} 0 Z",
                    h.center.x - h.radius,
                    h.center.y,
                    2.0 * h.radius,
                    -2.0 * h.radius,
                    r = h.radius
                )),
            }
        }
        canvas.evenodd_path(&d, &self.meta.color);
    }
}

/// Circle or regular polygon that can be moved, rotated and zoomed by its
/// border. While caught it may leave the visible area.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Plug {
    pub meta: Meta,
    pub form: PlugForm,
    pub center: Point2,
    pub radius: f64,
    #[serde(default)]
    pub angle: f64,
    /// Border node count of a circular plug, refreshed on release.
    #[serde(default)]
    pub n_border: usize,
    #[serde(skip)]
    aux: Option<GestureAux>,
}

impl Plug {
    pub fn new(ids: &mut IdGen, form: PlugForm, center: Point2, radius: f64, angle: f64) -> Result<Self, ShapeError> {
        form.validate(radius)?;
        if radius < PLUG_MIN_RADIUS {
            return Err(ShapeError::Invalid(format!("plug radius below {PLUG_MIN_RADIUS}")));
        }
        Ok(Self { meta: ids.meta(), form, center, radius, angle, n_border: circle_node_count(radius), aux: None })
    }

    fn n_resize(&self) -> usize {
        match self.form {
            PlugForm::Circle => self.n_border,
            PlugForm::Polygon(n) => n,
        }
    }
}

impl Rotatable for Plug {
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

impl BorderScalable for Plug {
    fn scaling_center(&self) -> Point2 {
        self.center
    }

    fn begin_border_scaling(&self, p: Point2) -> Result<GestureAux, ShapeError> {
        scaling_for(self.center, self.radius, p)
    }

    fn scale_update(&mut self, aux: &GestureAux, p: Point2) -> bool {
        let r = round_px(distance(self.center, p) * aux.scaling);
        if r >= PLUG_MIN_RADIUS && r != self.radius {
            self.radius = r;
            return true;
        }
        false
    }
}

impl Movable for Plug {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    /// Border nodes (small circles for a circle, side strips for a polygon),
    /// then the body.
    fn define_cover(&self) -> Cover {
        let mut nodes: Vec<CoverNode> = match self.form.outline(self.center, self.radius, self.angle) {
            Some(pts) => {
                let n = pts.len();
                let mut v: Vec<CoverNode> =
                    (0..n).map(|i| CoverNode::strip(pts[i], pts[(i + 1) % n], SMALL_NODE_RADIUS)).collect();
                v.push(CoverNode::polygon(pts).with_cursor(CursorHint::SizeAll));
                v
            }
            None => {
                let mut v: Vec<CoverNode> = points_on_circle(self.center, self.radius, self.n_border, 0.0)
                    .into_iter()
                    .map(|p| CoverNode::circle(p, SMALL_NODE_RADIUS))
                    .collect();
                v.push(CoverNode::circle(self.center, self.radius).with_cursor(CursorHint::SizeAll).with_clearance(false));
                v
            }
        };
        if nodes.is_empty() {
            nodes.push(CoverNode::circle(self.center, self.radius));
        }
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.center = self.center.offset(dx, dy);
    }

    fn start_gesture(&mut self, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        self.aux = match button {
            MouseButton::Right => self.begin_rotation(pt).ok(),
            MouseButton::Left if node < self.n_resize() => self.begin_border_scaling(pt).ok(),
            MouseButton::Left => None,
        };
        GestureStart { clipping: Some(ClippingLevel::Unsafe) }
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        match (button, self.aux.clone()) {
            (MouseButton::Left, _) if node >= self.n_resize() => {
                self.translate(dx, dy);
                true
            }
            (MouseButton::Left, Some(aux)) => self.scale_update(&aux, pt),
            (MouseButton::Right, Some(aux)) => {
                self.rotation_update(&aux, pt);
                true
            }
            _ => false,
        }
    }

    fn finish_gesture(&mut self, _node: usize, _shape: NodeShape) -> Released {
        self.aux = None;
        self.n_border = circle_node_count(self.radius);
        Released::Keep
    }

    fn basic_points(&self) -> Vec<Point2> {
        self.form
            .outline(self.center, self.radius, self.angle)
            .unwrap_or_else(|| vec![self.center])
    }

    fn bounds(&self) -> Rect {
        Rect::new(self.center.x - self.radius, self.center.y - self.radius, 2.0 * self.radius, 2.0 * self.radius)
    }

    fn draw(&self, canvas: &mut Canvas) {
        match self.form.outline(self.center, self.radius, self.angle) {
            Some(pts) => canvas.polygon(&pts, &self.meta.color),
            None => canvas.circle(self.center, self.radius, &self.meta.color),
        }
    }
}

pub const HOLED_MIN_HOLE: f64 = 10.0;

/// Regular polygon with a concentric round hole. Both borders resize while
/// the gap between them stays at least `min_gap`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HoledPoly {
    pub meta: Meta,
    pub center: Point2,
    /// Distance from the center to the vertices.
    pub radius: f64,
    pub n: usize,
    pub angle: f64,
    pub hole_radius: f64,
    pub min_gap: f64,
    pub n_inner: usize,
    #[serde(skip)]
    aux: Option<GestureAux>,
}

impl HoledPoly {
    pub fn new(
        ids: &mut IdGen,
        center: Point2,
        radius: f64,
        n: usize,
        angle: f64,
        hole_radius: f64,
        min_gap: f64,
    ) -> Result<Self, ShapeError> {
        PlugForm::Polygon(n).validate(radius)?;
        let p = Self {
            meta: ids.meta(),
            center,
            radius,
            n,
            angle,
            hole_radius,
            min_gap,
            n_inner: circle_node_count(hole_radius),
            aux: None,
        };
        if !p.gap_ok(radius, hole_radius) {
            return Err(ShapeError::Invalid("hole leaves less than the minimum gap".into()));
        }
        Ok(p)
    }

    /// Whether a polygon of vertex radius `r` leaves `min_gap` around a hole of `hole`.
    #[must_use]
    pub fn gap_ok(&self, r: f64, hole: f64) -> bool {
        hole >= HOLED_MIN_HOLE && r * (PI / self.n as f64).cos() - hole >= self.min_gap
    }

    #[must_use]
    pub fn vertices(&self) -> Vec<Point2> {
        regular_polygon_vertices(self.center, self.radius, self.n, self.angle).unwrap_or_default()
    }

    /// Proposed outer radius from a border drag.
    pub fn outer_update(&mut self, aux: &GestureAux, p: Point2) -> bool {
        let r = round_px(distance(self.center, p) * aux.scaling);
        if r != self.radius && self.gap_ok(r, self.hole_radius) {
            self.radius = r;
            return true;
        }
        false
    }

    /// Proposed hole radius: the pointer sits on the hole border.
    pub fn inner_update(&mut self, p: Point2) -> bool {
        let r = round_px(distance(self.center, p));
        if r != self.hole_radius && self.gap_ok(self.radius, r) {
            self.hole_radius = r;
            return true;
        }
        false
    }
}

impl Rotatable for HoledPoly {
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

impl Movable for HoledPoly {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    /// Side strips, hole border circles, the transparent hole, then the polygon.
    fn define_cover(&self) -> Cover {
        let pts = self.vertices();
        let n = pts.len();
        let mut nodes: Vec<CoverNode> =
            (0..n).map(|i| CoverNode::strip(pts[i], pts[(i + 1) % n], SMALL_NODE_RADIUS)).collect();
        nodes.extend(
            points_on_circle(self.center, self.hole_radius, self.n_inner, 0.0)
                .into_iter()
                .map(|p| CoverNode::circle(p, SMALL_NODE_RADIUS)),
        );
        nodes.push(CoverNode::circle(self.center, self.hole_radius - SMALL_NODE_RADIUS).with_behaviour(Behaviour::Transparent));
        nodes.push(CoverNode::polygon(pts).with_cursor(CursorHint::SizeAll));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.center = self.center.offset(dx, dy);
    }

    fn start_gesture(&mut self, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        self.aux = match button {
            MouseButton::Right => self.begin_rotation(pt).ok(),
            MouseButton::Left if node < self.n => scaling_for(self.center, self.radius, pt).ok(),
            MouseButton::Left => None,
        };
        GestureStart::default()
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        let inner = self.n..self.n + self.n_inner;
        match (button, self.aux.clone()) {
            (MouseButton::Left, Some(aux)) if node < self.n => self.outer_update(&aux, pt),
            (MouseButton::Left, _) if inner.contains(&node) => self.inner_update(pt),
            (MouseButton::Left, _) if node >= self.n + self.n_inner => {
                self.translate(dx, dy);
                true
            }
            (MouseButton::Right, Some(aux)) => {
                self.rotation_update(&aux, pt);
                true
            }
            _ => false,
        }
    }

    fn finish_gesture(&mut self, _node: usize, _shape: NodeShape) -> Released {
        self.aux = None;
        self.n_inner = circle_node_count(self.hole_radius);
        Released::Keep
    }

    fn basic_points(&self) -> Vec<Point2> {
        let mut pts = self.vertices();
        pts.push(self.center);
        pts
    }

    fn draw(&self, canvas: &mut Canvas) {
        let pts = self.vertices();
        let mut d = format!("M {} {}", pts[0].x, pts[0].y);
        for p in &pts[1..] {
            d.push_str(&format!(" L {} {}", p.x, p.y));
        }
        let (c, r) = (self.center, self.hole_radius);
        d.push_str(&format!(" Z M {} {} a {r} {r} 0 1 0 {} 0 a {r} {r} 0 1 0 {} 0 Z", c.x - r, c.y, 2.0 * r, -2.0 * r));
        canvas.evenodd_path(&d, &self.meta.color);
    }
}

crate::leaf_assembly!(HoleBoard, Plug, HoledPoly);
