//! Sliders across a resizable rectangle. Each slider keeps its relative
//! position when the rectangle changes; order-preserving sliders may not
//! pass their neighbours.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverNode, CursorHint, NodeShape, DEFAULT_HALF_STRIP};
use crate::engine::{MouseButton, MouseLink, ObjectId};
use crate::geometry::{Point2, Rect};
use crate::object::{Assembly, GestureStart, IdGen, Meta, Movable, Released};
use crate::scene::svg::Canvas;
use crate::shapes::RectShape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SliderDir {
    /// A horizontal line moved up and down.
    Horizontal,
    /// A vertical line moved left and right.
    Vertical,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Slider {
    pub meta: Meta,
    pub dir: SliderDir,
    /// Fraction of the rectangle's height (or width) from its top (or left).
    pub pos_coef: f64,
    pub order_preserving: bool,
    pub parent_rect: Rect,
    /// Neighbour limits captured at catch.
    #[serde(skip, default = "open_limits")]
    pub limits: (f64, f64),
}

fn open_limits() -> (f64, f64) {
    (f64::NEG_INFINITY, f64::INFINITY)
}

impl Slider {
    /// Absolute coordinate across the slider.
    #[must_use]
    pub fn coordinate(&self) -> f64 {
        let r = self.parent_rect;
        match self.dir {
            SliderDir::Horizontal => r.y + self.pos_coef * r.h,
            SliderDir::Vertical => r.x + self.pos_coef * r.w,
        }
    }

    fn edges(&self) -> (f64, f64) {
        let r = self.parent_rect;
        match self.dir {
            SliderDir::Horizontal => (r.top(), r.bottom()),
            SliderDir::Vertical => (r.left(), r.right()),
        }
    }

    fn ends(&self) -> (Point2, Point2) {
        let r = self.parent_rect;
        let c = self.coordinate();
        match self.dir {
            SliderDir::Horizontal => (Point2::new(r.left(), c), Point2::new(r.right(), c)),
            SliderDir::Vertical => (Point2::new(c, r.top()), Point2::new(c, r.bottom())),
        }
    }

    /// Accepts the move when the new coordinate stays within the narrowest of
    /// the neighbour limits and the rectangle edges, both inclusive.
    pub fn slide(&mut self, dx: f64, dy: f64) -> bool {
        let d = match self.dir {
            SliderDir::Horizontal => dy,
            SliderDir::Vertical => dx,
        };
        if d == 0.0 {
            return false;
        }
        let new = self.coordinate() + d;
        let (lo, hi) = self.edges();
        if new < self.limits.0.max(lo) || new > self.limits.1.min(hi) {
            return false;
        }
        self.pos_coef = (new - lo) / (hi - lo);
        true
    }
}

impl Movable for Slider {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn define_cover(&self) -> Cover {
        let (a, b) = self.ends();
        let cursor = match self.dir {
            SliderDir::Horizontal => CursorHint::SizeNS,
            SliderDir::Vertical => CursorHint::SizeWE,
        };
        Cover::assemble(vec![CoverNode::strip(a, b, DEFAULT_HALF_STRIP).with_cursor(cursor)])
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.parent_rect = self.parent_rect.translate(dx, dy);
    }

    fn move_node(&mut self, _node: usize, dx: f64, dy: f64, _pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        button == MouseButton::Left && self.slide(dx, dy)
    }

    fn finish_gesture(&mut self, _node: usize, _shape: NodeShape) -> Released {
        self.limits = open_limits();
        Released::Keep
    }

    fn pops_on_click(&self, _node: usize, _shape: NodeShape) -> bool {
        false
    }

    fn basic_points(&self) -> Vec<Point2> {
        let (a, b) = self.ends();
        vec![a, b]
    }

    fn draw(&self, canvas: &mut Canvas) {
        let (a, b) = self.ends();
        canvas.line(a, b, &self.meta.color, 2.0);
    }
}

crate::leaf_assembly!(Slider);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SliderBoard {
    pub rect: RectShape,
    /// Same-direction sliders are kept in coordinate order.
    pub sliders: Vec<Slider>,
}

impl SliderBoard {
    #[must_use]
    pub fn new(rect: RectShape) -> Self {
        Self { rect, sliders: Vec::new() }
    }

    /// Adds a slider at `coef` of the rectangle, keeping same-direction
    /// sliders sorted.
    pub fn add_slider(&mut self, ids: &mut IdGen, dir: SliderDir, coef: f64, order_preserving: bool) -> ObjectId {
        let mut meta = ids.meta();
        meta.parent_id = self.rect.meta.id;
        let id = meta.id;
        let s = Slider {
            meta,
            dir,
            pos_coef: coef.clamp(0.0, 1.0),
            order_preserving,
            parent_rect: self.rect.rect,
            limits: open_limits(),
        };
        let at = self
            .sliders
            .iter()
            .position(|o| o.dir == dir && o.pos_coef > s.pos_coef)
            .unwrap_or(self.sliders.len());
        self.sliders.insert(at, s);
        id
    }

    /// Neighbour limits: the previous and next same-direction slider in the
    /// list, or open when there is none (the rectangle edge then rules).
    pub fn limits_at_catch(&mut self, k: usize) {
        let s = &self.sliders[k];
        if !s.order_preserving {
            self.sliders[k].limits = open_limits();
            return;
        }
        let dir = s.dir;
        let low = self.sliders[..k].iter().rev().find(|o| o.dir == dir).map_or(f64::NEG_INFINITY, Slider::coordinate);
        let high = self.sliders[k + 1..].iter().find(|o| o.dir == dir).map_or(f64::INFINITY, Slider::coordinate);
        self.sliders[k].limits = (low, high);
    }

    fn sync(&mut self) {
        let r = self.rect.rect;
        for s in &mut self.sliders {
            s.parent_rect = r;
        }
    }
}

impl Assembly for SliderBoard {
    fn meta(&self) -> &Meta {
        &self.rect.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.rect.meta
    }

    fn children(&self) -> Vec<&dyn Assembly> {
        self.sliders.iter().map(|s| s as &dyn Assembly).collect()
    }

    fn children_mut(&mut self) -> Vec<&mut dyn Assembly> {
        self.sliders.iter_mut().map(|s| s as &mut dyn Assembly).collect()
    }

    fn own_cover(&self) -> Option<Cover> {
        Some(self.rect.define_cover())
    }

    fn start(&mut self, id: ObjectId, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        if id == self.rect.meta.id {
            return self.rect.start_gesture(node, pt, button);
        }
        if let Some(k) = self.sliders.iter().position(|s| s.meta.id == id) {
            self.limits_at_catch(k);
        }
        GestureStart::default()
    }

    fn move_part(&mut self, id: ObjectId, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        if id == self.rect.meta.id {
            let moved = self.rect.move_node(node, dx, dy, pt, button, link);
            if moved {
                self.sync();
            }
            return moved;
        }
        self.sliders
            .iter_mut()
            .find(|s| s.meta.id == id)
            .is_some_and(|s| s.move_node(node, dx, dy, pt, button, link))
    }

    fn finish(&mut self, id: ObjectId, node: usize, shape: NodeShape) -> Released {
        if id == self.rect.meta.id {
            return self.rect.finish_gesture(node, shape);
        }
        if let Some(s) = self.sliders.iter_mut().find(|s| s.meta.id == id) {
            s.finish_gesture(node, shape);
        }
        Released::Keep
    }

    fn pops(&self, id: ObjectId, node: usize, shape: NodeShape) -> bool {
        id == self.rect.meta.id && self.rect.pops_on_click(node, shape)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        Movable::translate(&mut self.rect, dx, dy);
        self.sync();
    }

    fn bounds(&self) -> Rect {
        self.rect.rect
    }

    fn draw(&self, canvas: &mut Canvas) {
        if self.rect.meta.rendered() {
            Movable::draw(&self.rect, canvas);
        }
        for s in self.sliders.iter().rev() {
            Assembly::draw(s, canvas);
        }
    }

    fn basic_points(&self) -> Vec<Point2> {
        Movable::basic_points(&self.rect)
    }
}
