//! Shapes with curved borders covered by many small nodes. The node count
//! depends on the size, so it is recomputed only when a gesture ends.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::cover::{Behaviour, Cover, CoverNode, CursorHint, NodeShape};
use crate::engine::{MouseButton, MouseLink};
use crate::geometry::{distance, line_angle, normalize_angle, point_at, point_line_distance, round_px, Point2, Rect};
use crate::object::{GestureStart, IdGen, Meta, Movable, Released};
use crate::scene::svg::Canvas;

use super::{arc_node_count, circle_node_count, points_on_arc, points_on_circle, single_compensation, GestureAux, Rotatable, ShapeError, SMALL_NODE_RADIUS};

pub const NNODE_CIRCLE_MIN_RADIUS: f64 = 15.0;
pub const STRIP_MIN_RADIUS: f64 = 12.0;
pub const STRIP_MIN_STRAIGHT: f64 = 20.0;

fn circle_bounds(c: Point2, r: f64) -> Rect {
    Rect::new(c.x - r, c.y - r, 2.0 * r, 2.0 * r)
}

/// Circle resized by any border point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NnodeCircle {
    pub meta: Meta,
    pub center: Point2,
    pub radius: f64,
    pub angle: f64,
    pub min_radius: f64,
    /// Border node count; changes only on release.
    pub n_border: usize,
    #[serde(skip)]
    aux: Option<GestureAux>,
}

impl NnodeCircle {
    pub fn new(ids: &mut IdGen, center: Point2, radius: f64) -> Result<Self, ShapeError> {
        if radius < NNODE_CIRCLE_MIN_RADIUS {
            return Err(ShapeError::Invalid(format!("radius below {NNODE_CIRCLE_MIN_RADIUS}")));
        }
        Ok(Self {
            meta: ids.meta(),
            center,
            radius,
            angle: 0.0,
            min_radius: NNODE_CIRCLE_MIN_RADIUS,
            n_border: circle_node_count(radius),
            aux: None,
        })
    }

    pub fn redefine_cover_on_release(&mut self) {
        self.n_border = circle_node_count(self.radius);
    }
}

/// Ring resized by either border.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NnodeRing {
    pub meta: Meta,
    pub center: Point2,
    pub r_outer: f64,
    pub r_inner: f64,
    pub angle: f64,
    pub min_inner: f64,
    pub min_width: f64,
    pub n_outer: usize,
    pub n_inner: usize,
    #[serde(skip)]
    aux: Option<GestureAux>,
}

impl NnodeRing {
    pub fn new(ids: &mut IdGen, center: Point2, r_outer: f64, r_inner: f64) -> Result<Self, ShapeError> {
        let (min_inner, min_width) = (10.0, 10.0);
        if r_inner < min_inner || r_outer - r_inner < min_width {
            return Err(ShapeError::Invalid("ring radii violate the minima".into()));
        }
        Ok(Self {
            meta: ids.meta(),
            center,
            r_outer,
            r_inner,
            angle: 0.0,
            min_inner,
            min_width,
            n_outer: circle_node_count(r_outer),
            n_inner: circle_node_count(r_inner),
            aux: None,
        })
    }

    pub fn redefine_cover_on_release(&mut self) {
        self.n_outer = circle_node_count(self.r_outer);
        self.n_inner = circle_node_count(self.r_inner);
    }
}

/// Rectangle with semicircular ends. Straight sides change the width, the
/// curves change the length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NnodeStrip {
    pub meta: Meta,
    pub c0: Point2,
    pub c1: Point2,
    pub radius: f64,
    /// Nodes on each semicircle.
    pub n_half: usize,
    #[serde(skip)]
    aux: Option<GestureAux>,
}

impl NnodeStrip {
    pub fn new(ids: &mut IdGen, c0: Point2, c1: Point2, radius: f64) -> Result<Self, ShapeError> {
        if radius < STRIP_MIN_RADIUS || distance(c0, c1) < STRIP_MIN_STRAIGHT {
            return Err(ShapeError::Invalid("strip violates the minima".into()));
        }
        Ok(Self { meta: ids.meta(), c0, c1, radius, n_half: arc_node_count(PI, radius), aux: None })
    }

    #[must_use]
    pub fn angle(&self) -> f64 {
        line_angle(self.c0, self.c1)
    }

    /// Straight-part corners: two on the upper side from c0 to c1, then the
    /// lower side from c1 back to c0.
    #[must_use]
    pub fn corners(&self) -> [Point2; 4] {
        let a = self.angle();
        [
            point_at(self.c0, a + FRAC_PI_2, self.radius),
            point_at(self.c1, a + FRAC_PI_2, self.radius),
            point_at(self.c1, a - FRAC_PI_2, self.radius),
            point_at(self.c0, a - FRAC_PI_2, self.radius),
        ]
    }

    pub fn redefine_cover_on_release(&mut self) {
        self.n_half = arc_node_count(PI, self.radius);
    }

    fn start_length_change(&self, node: usize, p: Point2) -> GestureAux {
        let pts = self.corners();
        let d = if node < 2 + self.n_half {
            point_line_distance(p, pts[3], pts[0])
        } else {
            point_line_distance(p, pts[1], pts[2])
        };
        GestureAux { start_distance: d.unwrap_or(0.0), ..GestureAux::default() }
    }

    /// Moves one end along the axis so the mouse keeps its starting distance
    /// from the straight part.
    fn length_change(&mut self, at_c0: bool, start_distance: f64, p: Point2) -> bool {
        let (fixed, moving) = if at_c0 { (self.c1, self.c0) } else { (self.c0, self.c1) };
        let dir = line_angle(fixed, moving);
        let along = distance(fixed, p) * (line_angle(fixed, p) - dir).cos();
        let len = along - start_distance;
        if len < STRIP_MIN_STRAIGHT {
            return false;
        }
        let moved = point_at(fixed, dir, len);
        if at_c0 {
            self.c0 = moved;
        } else {
            self.c1 = moved;
        }
        true
    }
}

macro_rules! single_angle_rotation {
    ($t:ty) => {
        impl Rotatable for $t {
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
    };
}

single_angle_rotation!(NnodeCircle);
single_angle_rotation!(NnodeRing);

impl Rotatable for NnodeStrip {
    fn rotation_center(&self) -> Point2 {
        self.c0.midpoint(self.c1)
    }

    fn begin_rotation(&self, p: Point2) -> Result<GestureAux, ShapeError> {
        Ok(single_compensation(self.rotation_center(), self.angle(), p))
    }

    fn rotation_update(&mut self, aux: &GestureAux, p: Point2) {
        let c = self.rotation_center();
        let half = distance(self.c0, self.c1) / 2.0;
        let a = line_angle(c, p) - aux.compensation;
        self.c0 = point_at(c, a + PI, half);
        self.c1 = point_at(c, a, half);
    }
}

fn rotate_with(aux: &Option<GestureAux>, f: impl FnOnce(&GestureAux)) -> bool {
    match aux {
        Some(a) => {
            f(a);
            true
        }
        None => false,
    }
}

impl Movable for NnodeCircle {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn define_cover(&self) -> Cover {
        let mut nodes: Vec<CoverNode> = points_on_circle(self.center, self.radius, self.n_border, 0.0)
            .into_iter()
            .map(|p| CoverNode::circle(p, SMALL_NODE_RADIUS))
            .collect();
        nodes.push(CoverNode::circle(self.center, round_px(self.radius)).with_cursor(CursorHint::SizeAll).with_clearance(false));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.center = self.center.offset(dx, dy);
    }

    fn start_gesture(&mut self, _node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        self.aux = (button == MouseButton::Right).then(|| single_compensation(self.center, self.angle, pt));
        GestureStart::default()
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        match button {
            MouseButton::Left if node == self.n_border => {
                self.translate(dx, dy);
                true
            }
            MouseButton::Left => {
                let r = round_px(distance(self.center, pt));
                if r != self.radius && r >= self.min_radius {
                    self.radius = r;
                    return true;
                }
                false
            }
            MouseButton::Right => {
                let aux = self.aux.clone();
                rotate_with(&aux, |a| self.rotation_update(a, pt))
            }
        }
    }

    fn finish_gesture(&mut self, _node: usize, _shape: NodeShape) -> Released {
        self.aux = None;
        self.redefine_cover_on_release();
        Released::Keep
    }

    fn basic_points(&self) -> Vec<Point2> {
        vec![self.center, point_at(self.center, self.angle, self.radius)]
    }

    fn bounds(&self) -> Rect {
        circle_bounds(self.center, self.radius)
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.circle(self.center, self.radius, &self.meta.color);
        canvas.line(self.center, point_at(self.center, self.angle, self.radius), "#202020", 1.0);
    }
}

impl Movable for NnodeRing {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    /// Outer border, inner border, the transparent hole, then the whole disc.
    fn define_cover(&self) -> Cover {
        let small = |p: Point2| CoverNode::circle(p, SMALL_NODE_RADIUS);
        let mut nodes: Vec<CoverNode> = points_on_circle(self.center, self.r_outer, self.n_outer, 0.0).into_iter().map(small).collect();
        nodes.extend(points_on_circle(self.center, self.r_inner, self.n_inner, 0.0).into_iter().map(small));
        nodes.push(CoverNode::circle(self.center, round_px(self.r_inner)).with_behaviour(Behaviour::Transparent));
        nodes.push(CoverNode::circle(self.center, round_px(self.r_outer)).with_cursor(CursorHint::SizeAll).with_clearance(false));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.center = self.center.offset(dx, dy);
    }

    fn start_gesture(&mut self, _node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        self.aux = (button == MouseButton::Right).then(|| single_compensation(self.center, self.angle, pt));
        GestureStart::default()
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        let r = round_px(distance(self.center, pt));
        match button {
            MouseButton::Left if node >= self.n_outer + self.n_inner => {
                self.translate(dx, dy);
                true
            }
            MouseButton::Left if node >= self.n_outer => {
                if self.min_inner <= r && r <= self.r_outer - self.min_width {
                    self.r_inner = r;
                    return true;
                }
                false
            }
            MouseButton::Left => {
                if self.r_inner + self.min_width <= r {
                    self.r_outer = r;
                    return true;
                }
                false
            }
            MouseButton::Right => {
                let aux = self.aux.clone();
                rotate_with(&aux, |a| self.rotation_update(a, pt))
            }
        }
    }

    fn finish_gesture(&mut self, _node: usize, _shape: NodeShape) -> Released {
        self.aux = None;
        self.redefine_cover_on_release();
        Released::Keep
    }

    fn basic_points(&self) -> Vec<Point2> {
        vec![self.center, point_at(self.center, self.angle, self.r_outer)]
    }

    fn bounds(&self) -> Rect {
        circle_bounds(self.center, self.r_outer)
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.ring(self.center, self.r_outer, self.r_inner, &self.meta.color);
        canvas.line(point_at(self.center, self.angle, self.r_inner), point_at(self.center, self.angle, self.r_outer), "#202020", 1.0);
    }
}

impl Movable for NnodeStrip {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    /// Two straight-side strips at ids 0 and 1, the arc nodes around c0, the
    /// arc nodes around c1, then the whole strip.
    fn define_cover(&self) -> Cover {
        let pts = self.corners();
        let a = self.angle();
        let mut nodes = vec![
            CoverNode::strip(pts[0], pts[1], SMALL_NODE_RADIUS),
            CoverNode::strip(pts[2], pts[3], SMALL_NODE_RADIUS),
        ];
        let small = |p: Point2| CoverNode::circle(p, SMALL_NODE_RADIUS);
        nodes.extend(points_on_arc(self.c0, self.radius, a + FRAC_PI_2, PI, self.n_half).into_iter().map(small));
        nodes.extend(points_on_arc(self.c1, self.radius, a - FRAC_PI_2, PI, self.n_half).into_iter().map(small));
        nodes.push(CoverNode::strip(self.c0, self.c1, self.radius).with_cursor(CursorHint::SizeAll).with_clearance(false));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.c0 = self.c0.offset(dx, dy);
        self.c1 = self.c1.offset(dx, dy);
    }

    fn start_gesture(&mut self, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        let whole = 2 + 2 * self.n_half;
        self.aux = match button {
            MouseButton::Right => self.begin_rotation(pt).ok(),
            MouseButton::Left if (2..whole).contains(&node) => Some(self.start_length_change(node, pt)),
            MouseButton::Left => None,
        };
        GestureStart::default()
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        let whole = 2 + 2 * self.n_half;
        match button {
            MouseButton::Left if node == whole => {
                self.translate(dx, dy);
                true
            }
            MouseButton::Left if node < 2 => {
                // Ids 0 and 1 survive any rebuild, so the count may follow at once.
                let r = point_line_distance(pt, self.c0, self.c1).unwrap_or(0.0);
                if r >= STRIP_MIN_RADIUS {
                    self.radius = r;
                    self.n_half = arc_node_count(PI, r);
                    return true;
                }
                false
            }
            MouseButton::Left => match self.aux.clone() {
                Some(aux) => self.length_change(node < 2 + self.n_half, aux.start_distance, pt),
                None => false,
            },
            MouseButton::Right => {
                let aux = self.aux.clone();
                rotate_with(&aux, |a| self.rotation_update(a, pt))
            }
        }
    }

    fn finish_gesture(&mut self, _node: usize, _shape: NodeShape) -> Released {
        self.aux = None;
        self.redefine_cover_on_release();
        Released::Keep
    }

    fn basic_points(&self) -> Vec<Point2> {
        vec![self.c0, self.c1]
    }

    fn bounds(&self) -> Rect {
        circle_bounds(self.c0, self.radius).union(&circle_bounds(self.c1, self.radius))
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.capsule(self.c0, self.c1, self.radius, &self.meta.color, 1.0);
    }
}

crate::leaf_assembly!(NnodeCircle, NnodeRing, NnodeStrip);

#[cfg(test)]
mod tests {
    use super::*;

    fn drag(m: &mut dyn Movable, node: usize, pt: Point2) -> bool {
        m.move_node(node, 0.0, 0.0, pt, MouseButton::Left, &mut MouseLink::headless())
    }

    #[test]
    fn circle_count_frozen_until_release() {
        let mut c = NnodeCircle::new(&mut IdGen::default(), Point2::new(200., 200.), 100.0).unwrap();
        assert_eq!(c.define_cover().len(), 80);
        c.start_gesture(0, Point2::new(300., 200.), MouseButton::Left);
        assert!(drag(&mut c, 0, Point2::new(250., 200.)));
        assert_eq!(c.radius, 50.0);
        assert_eq!(c.n_border, 79);
        c.finish_gesture(0, NodeShape::Circle);
        assert_eq!(c.n_border, 39);
        assert_eq!(c.define_cover().len(), 40);
    }

    #[test]
    fn ring_limits() {
        let mut r = NnodeRing::new(&mut IdGen::default(), Point2::new(0., 0.), 100.0, 50.0).unwrap();
        let inner = r.n_outer;
        assert!(!drag(&mut r, inner, Point2::new(95., 0.)));
        assert!(drag(&mut r, inner, Point2::new(90., 0.)));
        assert!(!drag(&mut r, inner, Point2::new(5., 0.)));
        assert!(!drag(&mut r, 0, Point2::new(99., 0.)));
        let cover = r.define_cover();
        assert_eq!(cover.node(cover.len() - 2).unwrap().behaviour, Behaviour::Transparent);
    }

    #[test]
    fn strip_minima_and_length_change() {
        let mut s = NnodeStrip::new(&mut IdGen::default(), Point2::new(100., 100.), Point2::new(200., 100.), 20.0).unwrap();
        assert!(!drag(&mut s, 0, Point2::new(150., 90.)));
        assert!(drag(&mut s, 0, Point2::new(150., 70.)));
        assert_eq!(s.radius, 30.0);
        // Grab the far end of the c1 curve: 30 px beyond the straight part.
        let node = 2 + s.n_half + s.n_half / 2;
        s.start_gesture(node, Point2::new(230., 100.), MouseButton::Left);
        assert!(drag(&mut s, node, Point2::new(260., 100.)));
        assert!((s.c1.x - 230.0).abs() < 1e-9);
        assert!(!drag(&mut s, node, Point2::new(140., 100.)));
    }
}
