//! Bodies that stick to the cursor: when a move is refused the cursor is
//! sent back to the point it grabbed, so the grab offset never drifts.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverNode, CursorHint, NodeShape};
use crate::engine::{MouseButton, MouseLink, ObjectId};
use crate::geometry::{distance, inside_convex_polygon, line_angle, point_at, regular_polygon_vertices, Point2, Rect};
use crate::object::{Assembly, GestureStart, IdGen, Meta, Movable, Released};
use crate::scene::svg::Canvas;
use crate::shapes::{NnodeStrip, RegularPoly, ShapeError};

use super::{labyrinth_allow_capsule, labyrinth_allow_capsule_move, labyrinth_allow_circle, Wall};

/// Sends the cursor back without the warp itself counting as a move.
fn return_cursor(link: &mut MouseLink, p: Point2) {
    link.set_traced(false);
    let _ = link.warp(p);
    link.set_traced(true);
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ball {
    pub meta: Meta,
    pub center: Point2,
    pub radius: f64,
    /// Cursor minus center, captured at catch.
    #[serde(skip)]
    pub offset: Option<(f64, f64)>,
}

impl Ball {
    pub fn new(ids: &mut IdGen, center: Point2, radius: f64) -> Self {
        Self { meta: ids.meta(), center, radius, offset: None }
    }

    /// Adhered move to the absolute cursor `pt`. The anchor is never built
    /// from accumulated deltas.
    pub fn adhered_move(&mut self, pt: Point2, link: &mut MouseLink, allow: impl Fn(Point2, Point2) -> bool) -> bool {
        let Some((ox, oy)) = self.offset else {
            return false;
        };
        let anchor = Point2::new(pt.x - ox, pt.y - oy);
        if anchor == self.center {
            return false;
        }
        if allow(self.center, anchor) {
            self.center = anchor;
            return true;
        }
        return_cursor(link, self.center.offset(ox, oy));
        false
    }
}

impl Movable for Ball {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn define_cover(&self) -> Cover {
        Cover::assemble(vec![CoverNode::circle(self.center, self.radius).with_cursor(CursorHint::SizeAll)])
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.center = self.center.offset(dx, dy);
    }

    fn start_gesture(&mut self, _node: usize, pt: Point2, _button: MouseButton) -> GestureStart {
        self.offset = Some((pt.x - self.center.x, pt.y - self.center.y));
        GestureStart::default()
    }

    fn move_node(&mut self, _node: usize, dx: f64, dy: f64, _pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        if button != MouseButton::Left {
            return false;
        }
        Movable::translate(self, dx, dy);
        true
    }

    fn finish_gesture(&mut self, _node: usize, _shape: NodeShape) -> Released {
        self.offset = None;
        Released::Keep
    }

    fn basic_points(&self) -> Vec<Point2> {
        vec![self.center]
    }

    fn bounds(&self) -> Rect {
        let r = self.radius;
        Rect::new(self.center.x - r, self.center.y - r, 2.0 * r, 2.0 * r)
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.circle(self.center, self.radius, &self.meta.color);
    }
}

crate::leaf_assembly!(Ball);

/// A regular polygon that moves and rotates, carrying a ball that can only
/// roll inside it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyWithBall {
    pub poly: RegularPoly,
    pub ball: Ball,
}

/// Whether a ball of radius `r` centered at `c` lies inside `poly`.
#[must_use]
pub fn ball_inside_poly(poly: &RegularPoly, c: Point2, r: f64) -> bool {
    let shrunk = poly.radius - r / (PI / poly.n as f64).cos();
    if shrunk <= 0.0 {
        return false;
    }
    regular_polygon_vertices(poly.center, shrunk, poly.n, poly.angle)
        .and_then(|v| inside_convex_polygon(c, &v))
        .unwrap_or(false)
}

impl PolyWithBall {
    pub fn new(ids: &mut IdGen, poly: RegularPoly, ball_center: Point2, ball_radius: f64) -> Result<Self, ShapeError> {
        if !ball_inside_poly(&poly, ball_center, ball_radius) {
            return Err(ShapeError::Invalid("ball outside its polygon".into()));
        }
        let mut ball = Ball::new(ids, ball_center, ball_radius);
        ball.meta.parent_id = poly.meta.id;
        Ok(Self { poly, ball })
    }

    /// Polygon change: the ball keeps its distance and turns with the
    /// polygon. A change that would leave the ball outside is refused.
    fn poly_move(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        let mut probe = self.poly.clone();
        if !probe.move_node(node, dx, dy, pt, button, link) {
            return false;
        }
        let old = &self.poly;
        let d = distance(old.center, self.ball.center);
        let c = if d == 0.0 {
            probe.center
        } else {
            point_at(probe.center, line_angle(old.center, self.ball.center) + probe.angle - old.angle, d)
        };
        if !ball_inside_poly(&probe, c, self.ball.radius) {
            return false;
        }
        self.poly = probe;
        self.ball.center = c;
        true
    }
}

impl Assembly for PolyWithBall {
    fn meta(&self) -> &Meta {
        &self.poly.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.poly.meta
    }

    fn children(&self) -> Vec<&dyn Assembly> {
        vec![&self.ball]
    }

    fn children_mut(&mut self) -> Vec<&mut dyn Assembly> {
        vec![&mut self.ball]
    }

    fn own_cover(&self) -> Option<Cover> {
        Some(self.poly.define_cover())
    }

    fn start(&mut self, id: ObjectId, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        if id == self.poly.meta.id {
            self.poly.start_gesture(node, pt, button)
        } else if id == self.ball.meta.id {
            self.ball.start_gesture(node, pt, button)
        } else {
            GestureStart::default()
        }
    }

    fn move_part(&mut self, id: ObjectId, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        if id == self.poly.meta.id {
            return self.poly_move(node, dx, dy, pt, button, link);
        }
        if id != self.ball.meta.id || button != MouseButton::Left {
            return false;
        }
        let poly = &self.poly;
        let r = self.ball.radius;
        self.ball.adhered_move(pt, link, |_, new| ball_inside_poly(poly, new, r))
    }

    fn finish(&mut self, id: ObjectId, node: usize, shape: NodeShape) -> Released {
        if id == self.poly.meta.id {
            self.poly.finish_gesture(node, shape)
        } else {
            if id == self.ball.meta.id {
                self.ball.finish_gesture(node, shape);
            }
            Released::Keep
        }
    }

    fn pops(&self, id: ObjectId, node: usize, shape: NodeShape) -> bool {
        id == self.poly.meta.id && self.poly.pops_on_click(node, shape)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        Movable::translate(&mut self.poly, dx, dy);
        Movable::translate(&mut self.ball, dx, dy);
    }

    fn bounds(&self) -> Rect {
        Movable::bounds(&self.poly)
    }

    fn draw(&self, canvas: &mut Canvas) {
        if self.poly.meta.rendered() {
            Movable::draw(&self.poly, canvas);
        }
        Assembly::draw(&self.ball, canvas);
    }

    fn basic_points(&self) -> Vec<Point2> {
        Movable::basic_points(&self.poly)
    }
}

/// A strip whose grab point is remembered as distance and angle from its
/// middle, so the cursor can be returned after any refused change.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdheredStrip {
    pub strip: NnodeStrip,
    /// Distance from the middle and angle relative to the axis.
    #[serde(skip)]
    pub grip: Option<(f64, f64)>,
}

impl AdheredStrip {
    #[must_use]
    pub fn new(strip: NnodeStrip) -> Self {
        Self { strip, grip: None }
    }

    fn middle(&self) -> Point2 {
        self.strip.c0.midpoint(self.strip.c1)
    }

    fn capture(&mut self, pt: Point2) {
        let m = self.middle();
        self.grip = Some((distance(m, pt), line_angle(m, pt) - self.strip.angle()));
    }

    /// Where the cursor belongs on the current pose.
    #[must_use]
    pub fn grip_point(&self) -> Option<Point2> {
        let (d, comp) = self.grip?;
        Some(point_at(self.middle(), self.strip.angle() + comp, d))
    }
}

impl Movable for AdheredStrip {
    fn meta(&self) -> &Meta {
        &self.strip.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.strip.meta
    }

    fn define_cover(&self) -> Cover {
        self.strip.define_cover()
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        Movable::translate(&mut self.strip, dx, dy);
    }

    fn start_gesture(&mut self, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        self.capture(pt);
        self.strip.start_gesture(node, pt, button)
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        self.strip.move_node(node, dx, dy, pt, button, link)
    }

    fn finish_gesture(&mut self, node: usize, shape: NodeShape) -> Released {
        self.grip = None;
        self.strip.finish_gesture(node, shape)
    }

    fn pops_on_click(&self, node: usize, shape: NodeShape) -> bool {
        self.strip.pops_on_click(node, shape)
    }

    fn basic_points(&self) -> Vec<Point2> {
        Movable::basic_points(&self.strip)
    }

    fn bounds(&self) -> Rect {
        Movable::bounds(&self.strip)
    }

    fn draw(&self, canvas: &mut Canvas) {
        Movable::draw(&self.strip, canvas);
    }
}

crate::leaf_assembly!(AdheredStrip);

/// Walls with balls and strips moving between them. The walls never change
/// during a gesture.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Labyrinth {
    pub meta: Meta,
    pub walls: Vec<Wall>,
    pub balls: Vec<Ball>,
    pub strips: Vec<AdheredStrip>,
}

impl Labyrinth {
    pub fn new(ids: &mut IdGen, walls: Vec<Wall>) -> Self {
        Self { meta: ids.meta(), walls, balls: Vec::new(), strips: Vec::new() }
    }

    pub fn add_ball(&mut self, ids: &mut IdGen, center: Point2, radius: f64) -> Result<ObjectId, ShapeError> {
        if !labyrinth_allow_circle(&self.walls, center, center, radius) {
            return Err(ShapeError::Invalid("ball touches a wall".into()));
        }
        let mut b = Ball::new(ids, center, radius);
        b.meta.parent_id = self.meta.id;
        let id = b.meta.id;
        self.balls.push(b);
        Ok(id)
    }

    pub fn add_strip(&mut self, mut strip: NnodeStrip) -> Result<ObjectId, ShapeError> {
        if !labyrinth_allow_capsule(&self.walls, strip.c0, strip.c1, strip.radius) {
            return Err(ShapeError::Invalid("strip touches a wall".into()));
        }
        strip.meta.parent_id = self.meta.id;
        let id = strip.meta.id;
        self.strips.push(AdheredStrip::new(strip));
        Ok(id)
    }

    /// Every ball and strip clear of the walls.
    #[must_use]
    pub fn is_legal(&self) -> bool {
        self.balls.iter().all(|b| labyrinth_allow_circle(&self.walls, b.center, b.center, b.radius))
            && self.strips.iter().all(|s| labyrinth_allow_capsule(&self.walls, s.strip.c0, s.strip.c1, s.strip.radius))
    }

    #[allow(clippy::too_many_arguments)]
    fn strip_move(&mut self, k: usize, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        let s = &mut self.strips[k];
        let mut probe = s.strip.clone();
        if !probe.move_node(node, dx, dy, pt, button, link) {
            return false;
        }
        let whole = node == probe.define_cover().last_id() && button == MouseButton::Left;
        let ok = if whole {
            labyrinth_allow_capsule_move(&self.walls, s.middle(), probe.c0, probe.c1, probe.radius)
        } else {
            labyrinth_allow_capsule(&self.walls, probe.c0, probe.c1, probe.radius)
        };
        if ok {
            s.strip = probe;
            s.capture(pt);
            return true;
        }
        if let Some(back) = s.grip_point() {
            return_cursor(link, back);
        }
        false
    }
}

impl Assembly for Labyrinth {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn children(&self) -> Vec<&dyn Assembly> {
        let mut v: Vec<&dyn Assembly> = self.balls.iter().map(|b| b as &dyn Assembly).collect();
        v.extend(self.strips.iter().map(|s| s as &dyn Assembly));
        v
    }

    fn children_mut(&mut self) -> Vec<&mut dyn Assembly> {
        let mut v: Vec<&mut dyn Assembly> = self.balls.iter_mut().map(|b| b as &mut dyn Assembly).collect();
        v.extend(self.strips.iter_mut().map(|s| s as &mut dyn Assembly));
        v
    }

    fn own_cover(&self) -> Option<Cover> {
        None
    }

    fn start(&mut self, id: ObjectId, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        if let Some(b) = self.balls.iter_mut().find(|b| b.meta.id == id) {
            return b.start_gesture(node, pt, button);
        }
        if let Some(s) = self.strips.iter_mut().find(|s| s.strip.meta.id == id) {
            return s.start_gesture(node, pt, button);
        }
        GestureStart::default()
    }

    fn move_part(&mut self, id: ObjectId, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        if let Some(b) = self.balls.iter_mut().find(|b| b.meta.id == id) {
            if button != MouseButton::Left {
                return false;
            }
            let (walls, r) = (&self.walls, b.radius);
            return b.adhered_move(pt, link, |old, new| labyrinth_allow_circle(walls, old, new, r));
        }
        match self.strips.iter().position(|s| s.strip.meta.id == id) {
            Some(k) => self.strip_move(k, node, dx, dy, pt, button, link),
            None => false,
        }
    }

    fn finish(&mut self, id: ObjectId, node: usize, shape: NodeShape) -> Released {
        if let Some(b) = self.balls.iter_mut().find(|b| b.meta.id == id) {
            return b.finish_gesture(node, shape);
        }
        if let Some(s) = self.strips.iter_mut().find(|s| s.strip.meta.id == id) {
            return s.finish_gesture(node, shape);
        }
        Released::Keep
    }

    fn pops(&self, _id: ObjectId, _node: usize, _shape: NodeShape) -> bool {
        false
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        for w in &mut self.walls {
            w.p0 = w.p0.offset(dx, dy);
            w.p1 = w.p1.offset(dx, dy);
        }
        for b in &mut self.balls {
            Movable::translate(b, dx, dy);
        }
        for s in &mut self.strips {
            Movable::translate(s, dx, dy);
        }
    }

    fn bounds(&self) -> Rect {
        let pts: Vec<Point2> = self.walls.iter().flat_map(|w| [w.p0, w.p1]).collect();
        Rect::bounding(&pts).unwrap_or_default()
    }

    fn draw(&self, canvas: &mut Canvas) {
        if self.meta.rendered() {
            for w in &self.walls {
                canvas.line(w.p0, w.p1, "#303030", 3.0);
            }
        }
        for s in self.strips.iter().rev() {
            Assembly::draw(s, canvas);
        }
        for b in self.balls.iter().rev() {
            Assembly::draw(b, canvas);
        }
    }

    fn basic_points(&self) -> Vec<Point2> {
        self.walls.iter().flat_map(|w| [w.p0, w.p1]).collect()
    }
}
